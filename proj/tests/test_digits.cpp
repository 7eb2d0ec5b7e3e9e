#include <doctest.h>

#include "gpade/digits.hpp"
#include "gpade/dioph.hpp"
#include "gpade/error.hpp"
#include "support.hpp"

using namespace gpade;

namespace {

DigitString literal(const std::string& s)
{
    DigitString ds;
    for (const char c : s) {
        ds.digits.push_back(static_cast<unsigned>(c - '0'));
    }
    ds.certified_len = ds.digits.size();
    return ds;
}

// Li2(1/10), mpmath at 560 digits.
const char* const li2_prefix = "1026177910993911311138373690572322137056899394192682995315312226617174164756785";
const char* const li2_480_500 = "850449578648437327290";

} // namespace

TEST_CASE("digits of rationals")
{
    CHECK(digits_of_rational(Rational(1, 7), 10, 12).to_string() == "142857142857");
    // Terminating expansions end in zeros.
    CHECK(digits_of_rational(Rational(1, 4), 10, 5).to_string() == "25000");
    const DigitString ds = digits_of_rational(Rational(22, 7), 10, 6);
    CHECK(ds.integer_part == 3);
    CHECK(ds.prefix_value(3) == 3142);
    CHECK(digits_of_rational(Rational(5, 8), 2, 4).to_string() == "1010");
}

TEST_CASE("repetition counts")
{
    const DigitString ds = literal("123123124");
    CHECK(repetition_count(ds, 3, 1) == 2);
    CHECK(repetition_count(ds, 3, 2) == 2);
    CHECK(repetition_count(ds, 1, 1) == 1);
    // The block "4" runs off the certified digits before a mismatch.
    CHECK_THROWS_AS(repetition_count(ds, 1, 9), PreconditionError);
    CHECK_THROWS_AS(repetition_count(digits_of_rational(Rational(1, 7), 10, 15), 6, 1), PreconditionError);
}

TEST_CASE("certified digits of the dilogarithm at 1/10")
{
    const GFunctionSystem li2 = resolve_system("polylog2");
    const DigitString ds = expand_digits(value_producer(li2, 2, Rational(1, 10)), 10, 500);
    REQUIRE(ds.certified_len == 500);
    CHECK(ds.integer_part == 0);
    const std::string s = ds.to_string();
    CHECK(s.substr(0, 79) == li2_prefix);
    CHECK(s.substr(479, 21) == li2_480_500);
}

TEST_CASE("property: convergents built from repeated blocks")
{
    const GFunctionSystem li2 = resolve_system("polylog2");
    const Producer xi = value_producer(li2, 2, Rational(1, 10));
    const DigitString ds = expand_digits(xi, 10, 260);
    REQUIRE(ds.certified_len == 260);
    for (int trial = 0; trial < 60; ++trial) {
        const auto t = static_cast<std::size_t>(gpade::testing::uniform(1, 4));
        const auto n = static_cast<std::size_t>(gpade::testing::uniform(1, 200));
        const Theorem2Convergent c = theorem2_convergent(ds, xi, t, n);
        CAPTURE(t);
        CAPTURE(n);
        CHECK(c.repetitions == repetition_count(ds, t, n));
        Integer bt;
        mpz_ui_pow_ui(bt.get_mpz_t(), 10, static_cast<unsigned long>(t));
        Integer bn;
        mpz_ui_pow_ui(bn.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
        CHECK(c.q == bn * (bt - 1));
        CHECK(c.digit_match_ok);
        // Agreement on n + tN - 1 digits gives |xi - p/q| <= 10^-(n + tN - 1). Checked against the 260-digit
        // prefix, which is within 10^-260 of xi. A block of 9s makes p/q terminate early, so the digit
        // strings themselves may differ.
        const std::size_t shared = n + t * static_cast<std::size_t>(c.repetitions) - 1;
        Integer s10;
        mpz_ui_pow_ui(s10.get_mpz_t(), 10, static_cast<unsigned long>(shared));
        Integer l10;
        mpz_ui_pow_ui(l10.get_mpz_t(), 10, 260);
        const Rational prefix = make_rational(ds.prefix_value(260), l10);
        CHECK(abs(make_rational(c.p, c.q) - prefix) <= Rational(1) / Rational(s10) + Rational(1) / Rational(l10));
    }
}

TEST_CASE("repetition profiles agree with pointwise counts")
{
    const GFunctionSystem li2 = resolve_system("polylog2");
    const Producer xi = value_producer(li2, 2, Rational(1, 10));
    const DigitString ds = expand_digits(xi, 10, 200);
    const RepetitionProfile prof = repetition_profile(ds, xi, 2, 50);
    REQUIRE(prof.values.size() == 50);
    Rational best = 0;
    for (std::size_t n = 1; n <= 50; ++n) {
        CHECK(prof.values[n - 1] == repetition_count(ds, 2, n));
        best = std::max(best, make_rational(Integer(prof.values[n - 1]), Integer(static_cast<unsigned long>(n))));
    }
    CHECK(prof.max_ratio == best);
}
