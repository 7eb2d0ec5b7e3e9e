#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gpade {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "a", "-a/b" (decimal). Throws PreconditionError on malformed input.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Rational abs(const Rational& x);
Integer abs(const Integer& x);

Integer pow(const Integer& base, unsigned long exponent);
// Integer powers of rationals; negative exponents invert (base must be nonzero).
Rational pow(const Rational& base, long exponent);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// lcm(1, 2, ..., n); n >= 1.
Integer lcm_range(long n);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

// Number of bits of |x| (0 for x = 0).
std::size_t bit_length(const Integer& x);

// Approximate base-2 exponent e with 2^(e-1) <= |x| < 2^(e+1); x nonzero.
long approx_log2(const Rational& x);

// Decimal rendering truncated toward -inf / +inf at the given number of fractional digits.
std::string to_decimal_down(const Rational& x, int digits);
std::string to_decimal_up(const Rational& x, int digits);

// Scientific rendering with `sig` significant digits, rounded toward -inf / +inf.
std::string to_scientific_down(const Rational& x, int sig);
std::string to_scientific_up(const Rational& x, int sig);

} // namespace gpade
