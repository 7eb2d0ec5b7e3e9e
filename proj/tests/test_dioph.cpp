#include <doctest.h>

#include "gpade/dioph.hpp"
#include "gpade/error.hpp"
#include "support.hpp"

using namespace gpade;

namespace {

const Rational& tol()
{
    static const Rational t(1, Integer("1000000000000000000000000000000"));
    return t;
}

} // namespace

TEST_CASE("certified evaluation against independent high-precision values")
{
    // mpmath at 40 digits: log(1 - 1/3), Li2(-1/10), Li2(1/10)
    const GFunctionSystem lg = resolve_system("log1m");
    const GFunctionSystem li2 = resolve_system("polylog2");
    const IntervalReal v1 = eval_certified(lg, 1, Rational(1, 3), tol());
    CHECK(v1.width() <= tol());
    CHECK(abs(v1.midpoint() - parse_rational("-405465108108164381978013115464349/1000000000000000000000000000000000")) < tol());
    const IntervalReal v2 = eval_certified(li2, 2, Rational(-1, 10), tol());
    CHECK(abs(v2.midpoint() - parse_rational("-976052352293215838411033418508/10000000000000000000000000000000")) < tol());
    const IntervalReal v3 = interval_refine(value_producer(li2, 2, Rational(1, 10)), tol());
    CHECK(abs(v3.midpoint() - parse_rational("1026177910993911311138373690572/10000000000000000000000000000000")) < tol());
    CHECK_THROWS_AS(eval_certified(lg, 1, Rational(1), tol()), PreconditionError);
}

TEST_CASE("nearest integers with ties to even")
{
    CHECK(nearest_integer(IntervalReal(Rational(5, 2))) == Integer(2));
    CHECK(nearest_integer(IntervalReal(Rational(7, 2))) == Integer(4));
    CHECK(nearest_integer(IntervalReal(Rational(-5, 2))) == Integer(-2));
    CHECK(nearest_integer(IntervalReal(Rational(13, 10), Rational(14, 10))) == Integer(1));
    CHECK_FALSE(nearest_integer(IntervalReal(Rational(4, 10), Rational(6, 10))).has_value());
}

TEST_CASE("property: the integer xi matches its rational definition and is divisible by b^m")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const GFunctionSystem li2 = resolve_system("polylog2");
    for (int trial = 0; trial < 30; ++trial) {
        const bool dilog = trial % 2 == 1;
        const GFunctionSystem& sys = dilog ? li2 : lg;
        const long m = gpade::testing::uniform(1, 3);
        const long h = gpade::testing::uniform(1, 3);
        const long q = static_cast<long>(sys.N()) * h;
        const long p = q + m + gpade::testing::uniform(0, 3);
        const Integer b(gpade::testing::uniform(10, 200));
        const Integer a(1);
        const Integer B(gpade::testing::uniform(1, 5));
        const std::size_t j = sys.N();
        const Integer n = nearest_numerator(sys, a, b, B, m, j);
        const IteratedFamily fam = iterate(build_pade(sys, p, q, h), sys, static_cast<long>(sys.N()));
        CAPTURE(trial);
        const XiWitness w = construct_xi(fam, sys, a, b, B, m, n, j);
        CHECK(w.xi == w.xi_direct);
        CHECK(w.divisible_by_bm);
        CHECK(w.xi != 0);
    }
}

TEST_CASE("chain parameters need p >= q + m")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const IteratedFamily fam = iterate(build_pade(lg, 2, 2, 2), lg, 2);
    CHECK_THROWS_AS(construct_xi(fam, lg, Integer(1), Integer(10), Integer(1), 1, Integer(0), 1), PreconditionError);
}

TEST_CASE("property mode replays the inequality chain at feasible sizes")
{
    GFunctionSystem lg = resolve_system("log1m");
    verify_growth(lg, 60);
    VerifyOptions opt;
    opt.property_mode = true;
    for (const long bv : {10L, 100L, 1000L}) {
        for (long m = 1; m <= 3; ++m) {
            const Integer b(bv);
            const Integer n = nearest_numerator(lg, Integer(1), b, Integer(1), m, 1);
            const VerifyReport r = verify_theorem1(lg, Integer(1), b, Integer(1), m, n, opt);
            CAPTURE(bv);
            CAPTURE(m);
            REQUIRE(r.chain.has_value());
            CHECK(r.chain->ok());
            CHECK(r.chain->identity_ok);
            // |F(a/b) - n/(B b^m)| is at least the certified lower bound of the chain.
            CHECK(r.lhs.lo() >= r.chain->lower_bound);
        }
    }
}

TEST_CASE("unmet hypotheses throw outside property mode")
{
    GFunctionSystem lg = resolve_system("log1m");
    verify_growth(lg, 60);
    const Integer n = nearest_numerator(lg, Integer(1), Integer(10), Integer(1), 1, 1);
    CHECK_THROWS_AS(verify_theorem1(lg, Integer(1), Integer(10), Integer(1), 1, n), HypothesisError);
}
