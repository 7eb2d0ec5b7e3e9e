#include <doctest.h>

#include "gpade/error.hpp"
#include "gpade/quad.hpp"
#include "support.hpp"

using namespace gpade;

namespace {

std::vector<std::string> fractions(const SqrtExpansion& e, std::size_t k)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < k && i < e.convergents.size(); ++i) {
        out.push_back(to_string(e.convergents[i].alpha) + "/" + to_string(e.convergents[i].beta));
    }
    return out;
}

// "0.0123" -> 123/10^4
Rational decimal_literal(const std::string& s)
{
    const auto dot = s.find('.');
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(s.size() - dot - 1));
    Rational r(parse_integer(s.substr(0, dot) + s.substr(dot + 1)), den);
    r.canonicalize();
    return r;
}

} // namespace

TEST_CASE("continued fractions of square roots")
{
    const SqrtExpansion s2 = cf_sqrt(Rational(2), 6);
    CHECK(s2.a0 == 1);
    CHECK(s2.period == std::vector<Integer>{2});
    CHECK(fractions(s2, 6) == std::vector<std::string>{"1/1", "3/2", "7/5", "17/12", "41/29", "99/70"});

    const SqrtExpansion s3 = cf_sqrt(Rational(3), 6);
    CHECK(s3.period == std::vector<Integer>{1, 2});
    CHECK(fractions(s3, 6) == std::vector<std::string>{"1/1", "2/1", "5/3", "7/4", "19/11", "26/15"});

    // sqrt(2/3) = [0; 1, 4, 2, 4, 2, ...] (mpmath)
    const SqrtExpansion s23 = cf_sqrt(Rational(2, 3), 8);
    for (std::size_t k = 0; k < 8; ++k) {
        const long expect[] = {0, 1, 4, 2, 4, 2, 4, 2};
        CHECK(s23.partial_quotient(k) == expect[k]);
    }

    CHECK_THROWS_AS(cf_sqrt(Rational(4), 5), PreconditionError);
    CHECK_THROWS_AS(cf_sqrt(Rational(9, 4), 5), PreconditionError);
    CHECK(convergents_up_to(s2, Integer(30)).size() == 5);
}

TEST_CASE("property: convergents of random surds")
{
    for (int trial = 0; trial < 40; ++trial) {
        Rational d(gpade::testing::uniform(2, 400), static_cast<unsigned long>(gpade::testing::uniform(1, 9)));
        d.canonicalize();
        Integer rn;
        Integer rd;
        mpz_sqrt(rn.get_mpz_t(), d.get_num_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_den_mpz_t());
        if (rn * rn == d.get_num() && rd * rd == d.get_den()) {
            continue;
        }
        const SqrtExpansion e = cf_sqrt(d, 25);
        CAPTURE(to_string(d));
        for (std::size_t k = 0; k < e.convergents.size(); ++k) {
            const QuadConvergent& c = e.convergents[k];
            CHECK(c.pell_value == e.v * c.alpha * c.alpha - e.u * c.beta * c.beta);
            const PellCheck pc = pell_bound_check(c, d);
            CHECK(pc.exact_ok);
            CHECK(pc.interval_ok);
            if (k > 0) {
                const QuadConvergent& prev = e.convergents[k - 1];
                const Integer det = c.alpha * prev.beta - prev.alpha * c.beta;
                CHECK(abs(det) == 1);
            }
        }
    }
}

TEST_CASE("reduction to a binomial value")
{
    const SqrtExpansion s2 = cf_sqrt(Rational(2), 6);
    const Reduction r = reduce_to_theorem1(s2.convergents[2], Rational(2));
    CHECK(r.a == -1);
    CHECK(r.b == 49);
    CHECK(r.identity_ok);

    const Reduction r3 = reduce_to_theorem1(cf_sqrt(Rational(3), 3).convergents[1], Rational(3));
    CHECK(r3.a == 1);
    CHECK(r3.b == 4);
    CHECK(r3.identity_ok);
    CHECK(r3.hypothesis == Tri::no);
}

TEST_CASE("approximation scan with a convergent denominator")
{
    // |sqrt 2 - n/2^m| for m = 1..5 (mpmath)
    const char* const expect[] = {"0.0857864376269049511983", "0.0857864376269049511983", "0.0392135623730950488016",
                                  "0.0232864376269049511983", "0.00796356237309504880168"};
    const ScanReport s = theorem5_scan(Rational(2), cf_sqrt(Rational(2), 3).convergents[1], 1, 5, Denominator::beta);
    CHECK(s.den == 2);
    REQUIRE(s.rows.size() == 5);
    const long ns[] = {3, 6, 11, 23, 45};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(s.rows[i].m == static_cast<long>(i) + 1);
        CHECK(s.rows[i].n == ns[i]);
        CHECK(abs(s.rows[i].distance.midpoint() - decimal_literal(expect[i])) <
              Rational(1, Integer("1000000000000000000000")));
    }
}
