#include <doctest.h>

#include "gpade/constants.hpp"
#include "gpade/error.hpp"
#include "support.hpp"

using namespace gpade;

namespace {

Integer pow10(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

} // namespace

TEST_CASE("dilogarithm constants reproduce the closed forms")
{
    GFunctionSystem li2 = resolve_system("polylog2");
    verify_growth(li2, 40);
    const ConstantsReport r = compute_constants(li2, Integer(1), Integer(10), Rational(1), 1);
    CHECK(r.chi_exact.to_string() == "4*e^66");
    CHECK(r.c2 == 12);
    CHECK(r.c6_exact.to_string() == "2^(17/16)*e^(187/3)");
    CHECK(r.y == Rational(1, 12));
    // 1201779/48 + 1185019/(3 log 2) + 396 log 2 = 595185.2270032345811..., mpmath at 40 digits.
    const Rational ref = parse_rational("595185227003234581/1000000000000");
    CHECK(abs(r.c4.midpoint() - ref) < Rational(1, 1000000));
    REQUIRE(r.c4_reference.has_value());
    CHECK(r.c4_reference->intersects(r.c4));
    CHECK_FALSE(r.c4_discrepancy);
}

TEST_CASE("the size hypothesis on b")
{
    GFunctionSystem li2 = resolve_system("polylog2");
    verify_growth(li2, 40);
    const ConstantsReport small = compute_constants(li2, Integer(1), Integer(10), Rational(1), 1);
    CHECK(small.hypothesis3 == Tri::no);
    CHECK_FALSE(small.h.has_value());
    CHECK_THROWS_AS(compute_constants(li2, Integer(1), Integer(10), Rational(1), 1, {}, 448, true), HypothesisError);

    // (4 e^66)^12 = 10^(351.1...), so b = 10^360 clears it; x = 4.10039..., h = floor(m / (x - 3)).
    const ConstantsReport one = compute_constants(li2, Integer(1), pow10(360), Rational(1), 1);
    REQUIRE(one.h.has_value());
    CHECK(*one.h == 0);
    const ConstantsReport big = compute_constants(li2, Integer(1), pow10(360), Rational(1), 100);
    CHECK(big.hypothesis3 == Tri::yes);
    REQUIRE(big.h.has_value());
    CHECK(*big.h == 90);
    CHECK(*big.p == 369);
    CHECK(*big.q == 187);
}

TEST_CASE("property: the remainder bound dominates the certified remainder")
{
    for (const char* name : {"log1m", "polylog2", "binom:1/2"}) {
        GFunctionSystem sys = resolve_system(name);
        verify_growth(sys, 30);
        const auto N = static_cast<long>(sys.N());
        for (long p = 2; p <= 7; ++p) {
            for (long h = 1; N * h <= p; ++h) {
                const long q = N * h;
                const long K = std::max(N, h / sys.d());
                const IteratedFamily fam = iterate(build_pade(sys, p, q, h), sys, K);
                for (long k = 0; k <= K; ++k) {
                    CHECK(Rational(poly_height(fam.Qk[static_cast<std::size_t>(k)])) <=
                          bound_height_Qk(fam.base, sys, k));
                    for (const long den : {3L, 7L, 20L}) {
                        Rational z(gpade::testing::uniform(0, 1) == 0 ? -1 : 1, static_cast<unsigned long>(den));
                        for (std::size_t j = 1; j <= sys.N(); ++j) {
                            const IntervalReal R = interval_refine(remainder_producer(fam, sys, j, k, z),
                                                                   Rational(1, Integer("1000000000000000000000000")));
                            CAPTURE(name);
                            CAPTURE(p);
                            CAPTURE(h);
                            CAPTURE(k);
                            CHECK(abs(R).hi() <= bound_remainder(fam, sys, k, z));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("height bounds need verified growth")
{
    GFunctionSystem lg = resolve_system("log1m");
    const PadeApproximant A = build_pade(lg, 3, 2, 2);
    CHECK_THROWS_AS(static_cast<void>(bound_height_Qk(A, lg, 0)), PreconditionError);
}
