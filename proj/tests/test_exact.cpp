#include <doctest.h>

#include "gpade/error.hpp"
#include "gpade/exp_product.hpp"
#include "gpade/ratfun.hpp"
#include "gpade/series.hpp"
#include "support.hpp"

using namespace gpade;
using gpade::testing::random_poly;
using gpade::testing::random_rational;
using gpade::testing::uniform;

TEST_CASE("parsing and canonical rationals")
{
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_integer("-123456789012345678901234567890") * 10 ==
          parse_integer("-1234567890123456789012345678900"));
    CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK_THROWS_AS(parse_integer("1.5"), PreconditionError);
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
}

TEST_CASE("integer helpers")
{
    CHECK(lcm_range(10) == 2520);
    CHECK(lcm_range(1) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(floor(Rational(-7, 2)) == -4);
    CHECK(ceil(Rational(-7, 2)) == -3);
    CHECK(bit_length(Integer(255)) == 8);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("directed decimal rendering")
{
    CHECK(to_decimal_down(Rational(1, 3), 5) == "0.33333");
    CHECK(to_decimal_up(Rational(1, 3), 5) == "0.33334");
    CHECK(to_decimal_down(Rational(-1, 3), 5) == "-0.33334");
    CHECK(to_scientific_down(Rational(12345), 3) == "1.23e4");
    CHECK(to_scientific_up(Rational(12345), 3) == "1.24e4");
}

TEST_CASE("polynomial basics")
{
    const Poly a = Poly::from_integers({2, -1});
    const Poly b = Poly::from_integers({1, 1});
    CHECK(a * b == Poly::from_integers({2, 1, -1}));
    CHECK((a * b).derivative() == Poly::from_integers({1, -2}));
    CHECK(Poly().degree() == std::nullopt);
    CHECK(Poly::monomial(Rational(3), 4).valuation() == 4u);
    CHECK(a.reflected() == Poly::from_integers({2, 1}));
    CHECK(a(Rational(2)) == 0);
    CHECK(poly_height(Poly::from_integers({1, -7, 3})) == 7);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(exact_div(Poly::from_integers({1, 0, 1}), a), InternalError);
}

TEST_CASE("property: serial and parallel products agree and respect the height bound")
{
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(40);
        const Poly b = random_poly(40);
        const Poly s = mul_serial(a, b);
        CHECK(s == mul_parallel(a, b));
        CHECK(s == a * b);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(poly_height(s) <= product_height_bound(a, b));
        }
    }
}

TEST_CASE("property: Euclidean division reconstructs the dividend")
{
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(12);
        Poly b = random_poly(6);
        if (b.is_zero()) {
            b = Poly::constant(1);
        }
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK((r.is_zero() || *r.degree() < *b.degree()));
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("truncated series arithmetic")
{
    const std::size_t order = 12;
    // sum z^n times (1 - z) is 1 modulo z^order
    const SeriesTrunc geo = SeriesTrunc::from_oracle([](std::size_t) { return Rational(1); }, order);
    const SeriesTrunc prod = Poly::from_integers({1, -1}) * geo;
    CHECK(prod.order() == order);
    CHECK(prod[0] == 1);
    for (std::size_t n = 1; n < order; ++n) {
        CHECK(prod[n] == 0);
    }
    // exp is its own derivative; the derivative loses one known coefficient.
    const SeriesTrunc ex = SeriesTrunc::from_oracle(
        [](std::size_t n) -> Rational { return Rational(1) / Rational(factorial(n)); }, order);
    const SeriesTrunc dex = ex.derivative();
    CHECK(dex.order() == order - 1);
    for (std::size_t n = 0; n + 1 < order; ++n) {
        CHECK(dex[n] == ex[n]);
    }
    CHECK((ex - ex).valuation() == std::nullopt);
}

TEST_CASE("rational function matrices clear with the denominator polynomial")
{
    RatFunMatrix A(2);
    A.set(1, 0, Poly::constant(1), Poly::from_integers({1, -1}));
    const PolyMatrix DA = A.cleared(Poly::from_integers({1, -1}));
    CHECK(DA[1][0] == Poly::constant(1));
    CHECK(DA[0][0].is_zero());
    CHECK(A.row_is_zero(0));
    CHECK_THROWS_AS(static_cast<void>(A.cleared(Poly::constant(1))), PreconditionError);
    CHECK_THROWS(A.set(0, 0, Poly::constant(1), Poly()));
    // -A(-z): 1/(1-z) becomes -1/(1+z)
    const RatFunMatrix R = A.reflected();
    CHECK(R.cleared(Poly::from_integers({1, 1}))[1][0] == Poly::constant(-1));
}

TEST_CASE("property: interval operations enclose the exact results")
{
    for (int trial = 0; trial < 300; ++trial) {
        const Rational x = random_rational();
        const Rational y = random_rational();
        const Rational wx = abs(random_rational()) / 100;
        const Rational wy = abs(random_rational()) / 100;
        const IntervalReal X(x - wx, x + wx);
        const IntervalReal Y(y - wy, y + wy);
        CHECK((X + Y).contains(x + y));
        CHECK((X - Y).contains(x - y));
        CHECK((X * Y).contains(x * y));
        CHECK(abs(X).contains(abs(x)));
        if (Y.lo() > 0 || Y.hi() < 0) {
            CHECK((X / Y).contains(x / y));
        }
        CHECK((X * Y).rounded(20).contains(X * Y));
    }
}

TEST_CASE("property: transcendental enclosures are mutually consistent")
{
    for (int trial = 0; trial < 40; ++trial) {
        const Rational x = abs(random_rational(50)) + Rational(1, 7);
        const long bits = 160;
        CHECK(exp_interval(log_interval(x, bits), bits).contains(x));
        const IntervalReal s = sqrt_interval(x, bits);
        CHECK((s * s).contains(x));
        CHECK(s.width() < Rational(1, 1000000));
    }
}

TEST_CASE("transcendental enclosures against independent high-precision values")
{
    const Rational tol(1, Integer("1000000000000000000000000000"));
    CHECK(log_interval(Rational(2, 3), 128).contains(log_interval(Rational(2, 3), 256)));
    CHECK(abs(log_interval(Rational(2, 3), 128).midpoint() - parse_rational("-405465108108164381978013115464/1000000000000000000000000000000")) < tol);
    CHECK(abs(sqrt_interval(Rational(3), 128).midpoint() - parse_rational("173205080756887729352744634151/100000000000000000000000000000")) < tol);
    const IntervalReal l2 = log2_interval(128);
    CHECK(abs(l2.midpoint() - parse_rational("693147180559945309417232121458/1000000000000000000000000000000")) < tol);
}

TEST_CASE("producers honour the requested width")
{
    // 1/(1-z) at z = 1/3, coefficients bounded by 1 * 1^(n+1)
    const Producer geo = series_producer([](std::size_t) { return Rational(1); }, Rational(1, 3), Rational(1), Rational(1));
    const IntervalReal v = interval_refine(geo, Rational(1, 1000000));
    CHECK(v.contains(Rational(3, 2)));
    CHECK(v.width() <= Rational(1, 1000000));
    CHECK_THROWS_AS(series_producer([](std::size_t) { return Rational(1); }, Rational(1), Rational(1), Rational(1)),
                    PreconditionError);
    CHECK(interval_refine(constant_producer(Rational(5, 7)), Rational(1, 10)).is_point());
}

TEST_CASE("exact exponential products")
{
    const ExpProduct c1 = ExpProduct::rational(4) * ExpProduct::exp(66);
    CHECK(c1.to_string() == "4*e^66");
    CHECK(ExpProduct::rational(2).pow(Rational(17, 16)).to_string() == "2^(17/16)");
    CHECK(c1.log(128).intersects(IntervalReal(Rational(66)) + log_interval(Rational(4), 200)));
    // 4 e^66 = 1.842874653732516617070927e29
    const IntervalReal v = c1.value(128);
    CHECK(abs(v.midpoint() - Rational(Integer("184287465373251661707092700000"))) < 100000);
    CHECK(ExpProduct::exp(2).pow(Rational(1, 2)) == ExpProduct::exp(1));
}
