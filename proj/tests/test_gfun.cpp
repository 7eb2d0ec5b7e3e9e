#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gpade/error.hpp"
#include "gpade/gfun.hpp"

using namespace gpade;

TEST_CASE("builtin coefficients")
{
    const GFunctionSystem li2 = resolve_system("polylog2");
    CHECK(li2.N() == 2);
    CHECK(li2.d() == 2);
    CHECK(li2.C() == 1);
    CHECK(li2.coefficient(2, 3) == Rational(1, 9));
    CHECK(li2.coefficient(1, 0) == 0);
    CHECK(li2.denominator(4) == 144);
    CHECK(li2.D_poly() == Poly::from_integers({0, 1, -1}));

    const GFunctionSystem lg = resolve_system("log1m");
    CHECK(lg.N() == 1);
    CHECK(lg.d() == 1);
    CHECK(lg.coefficient(1, 5) == Rational(-1, 5));
    CHECK(lg.denominator(10) == 2520);

    // (1-z)^(1/2) = 1 - z/2 - z^2/8 - z^3/16 - 5 z^4/128
    const GFunctionSystem sq = resolve_system("binom:1/2");
    CHECK(sq.coefficient(1, 0) == 1);
    CHECK(sq.coefficient(1, 1) == Rational(-1, 2));
    CHECK(sq.coefficient(1, 2) == Rational(-1, 8));
    CHECK(sq.coefficient(1, 3) == Rational(-1, 16));
    CHECK(sq.coefficient(1, 4) == Rational(-5, 128));
}

TEST_CASE("the dilogarithm system matrix")
{
    const GFunctionSystem li2 = resolve_system("polylog2");
    const RatFunMatrix& A = li2.A();
    CHECK(A.row_is_zero(0));
    // A[1][0] = 1/(1-z), A[2][1] = 1/z, compared after clearing with z(1-z)
    const PolyMatrix DA = li2.cleared_matrix();
    CHECK(DA[1][0] == Poly::from_integers({0, 1}));
    CHECK(DA[2][1] == Poly::from_integers({1, -1}));
    CHECK(DA[1][1].is_zero());
    CHECK(DA[2][0].is_zero());
}

TEST_CASE("invalid systems are rejected")
{
    CHECK_THROWS_AS(resolve_system("binom:2"), PreconditionError);
    CHECK_THROWS_AS(resolve_system("no-such-system"), PreconditionError);
    CHECK_THROWS_AS(resolve_system("polylog0"), PreconditionError);
}

TEST_CASE("property: every builtin satisfies its differential system exactly")
{
    for (const char* name : {"log1m", "polylog1", "polylog2", "polylog3", "binom:1/2", "binom:-1/3", "binom:2/5"}) {
        const GFunctionSystem sys = resolve_system(name);
        CAPTURE(name);
        CHECK(verify_differential_system(sys, 40));
        CHECK(verify_differential_system(sys.reflected(), 40));
        CHECK(sys.A().row_is_zero(0));
        CHECK(sys.d() >= 1);
        for (std::size_t n = 1; n < 40; ++n) {
            CHECK(sys.denominator(n) % sys.denominator(n - 1) == 0);
        }
    }
}

TEST_CASE("growth verification on the dilogarithm")
{
    GFunctionSystem li2 = resolve_system("polylog2");
    CHECK(li2.verified_range() == -1);
    const GrowthReport r25 = verify_growth(li2, 25);
    CHECK(r25.C_ok);
    CHECK(r25.D_ok);
    CHECK(li2.verified_range() == 25);

    // lcm(1..n)^2 <= e^(2(n+1)) first fails at n = 73 (exact integer scan, done independently).
    const GrowthReport r100 = verify_growth(li2, 100);
    CHECK(r100.C_ok);
    CHECK_FALSE(r100.D_ok);
    REQUIRE(r100.first_violation.has_value());
    CHECK(*r100.first_violation == 73);
    CHECK(r100.violation_kind == "D");
    CHECK(li2.verified_range() == 72);
}

TEST_CASE("growth verification on the adaptive binomial oracle")
{
    GFunctionSystem sq = resolve_system("binom:1/2");
    const GrowthReport r = verify_growth(sq, 120);
    CHECK(r.C_ok);
    CHECK(r.D_ok);
    CHECK(r.integrality_ok);
    CHECK(sq.verified_range() == 120);
}

TEST_CASE("overrides reset the verified range")
{
    GFunctionSystem lg = resolve_system("log1m");
    verify_growth(lg, 30);
    CHECK(lg.verified_range() == 30);
    lg.override_C(Rational(2));
    CHECK(lg.verified_range() == -1);
    CHECK(lg.C() == 2);
}

TEST_CASE("reflection flips odd coefficients")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const GFunctionSystem r = lg.reflected();
    for (std::size_t n = 0; n < 10; ++n) {
        CHECK(r.coefficient(1, n) == (n % 2 == 0 ? lg.coefficient(1, n) : Rational(-lg.coefficient(1, n))));
    }
}

TEST_CASE("system definition files")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "gpade_test_system.json";
    {
        std::ofstream out(path);
        out << R"({"name": "polylog", "params": {"s": 2}, "C": "3/2",
                  "Dgrowth": {"coefficient": "1", "e_exponent": "5/2", "radicals": [["2", "1/2"]]}})";
    }
    const GFunctionSystem sys = resolve_system(path.string());
    CHECK(sys.N() == 2);
    CHECK(sys.C() == Rational(3, 2));
    CHECK(sys.Dgrowth().to_string() == "2^(1/2)*e^(5/2)");

    {
        std::ofstream out(path);
        out << R"({"name": "binom_power", "params": {"alpha": "1/3"}})";
    }
    CHECK(resolve_system(path.string()).coefficient(1, 1) == Rational(-1, 3));

    {
        std::ofstream out(path);
        out << R"({"name": "bessel"})";
    }
    CHECK_THROWS_AS(resolve_system(path.string()), PreconditionError);
    {
        std::ofstream out(path);
        out << "not json";
    }
    CHECK_THROWS_AS(resolve_system(path.string()), PreconditionError);
    std::filesystem::remove(path);
}
