#include "gpade/exact.hpp"

#include <cctype>

#include "gpade/error.hpp"

namespace gpade {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw PreconditionError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_decimal_integer(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        ++i;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

Integer parse_checked(std::string s)
{
    if (!is_decimal_integer(s)) {
        throw PreconditionError("malformed integer '" + s + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

} // namespace

Integer parse_integer(const std::string& text)
{
    return parse_checked(text);
}

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_checked(text));
    }
    const Integer num = parse_checked(text.substr(0, slash));
    const std::string den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-') {
        throw PreconditionError("malformed rational '" + text + "'");
    }
    const Integer den = parse_checked(den_text);
    if (den == 0) {
        throw PreconditionError("malformed rational '" + text + "': zero denominator");
    }
    return make_rational(num, den);
}

std::string to_string(const Integer& x)
{
    return x.get_str(10);
}

std::string to_string(const Rational& x)
{
    return x.get_str(10);
}

bool is_integer(const Rational& x)
{
    return x.get_den() == 1;
}

Integer floor(const Rational& x)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Rational abs(const Rational& x)
{
    return sgn(x) < 0 ? Rational(-x) : x;
}

Integer abs(const Integer& x)
{
    return sgn(x) < 0 ? Integer(-x) : x;
}

Integer pow(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0) {
            throw PreconditionError("negative power of zero");
        }
        const Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    const auto e = static_cast<unsigned long>(exponent);
    return make_rational(pow(Integer(base.get_num()), e), pow(Integer(base.get_den()), e));
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer lcm_range(long n)
{
    if (n < 1) {
        throw PreconditionError("lcm_range requires n >= 1");
    }
    Integer acc = 1;
    for (long i = 2; i <= n; ++i) {
        acc = lcm(acc, Integer(i));
    }
    return acc;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::size_t bit_length(const Integer& x)
{
    if (x == 0) {
        return 0;
    }
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

long approx_log2(const Rational& x)
{
    return static_cast<long>(bit_length(x.get_num())) - static_cast<long>(bit_length(x.get_den()));
}

namespace {

Integer pow10(int e)
{
    return pow(Integer(10), static_cast<unsigned long>(e));
}

std::string render_fixed(const Integer& scaled, int digits)
{
    const bool neg = sgn(scaled) < 0;
    std::string s = abs(scaled).get_str(10);
    if (digits > 0) {
        if (static_cast<int>(s.size()) <= digits) {
            s.insert(0, static_cast<std::size_t>(digits) - s.size() + 1, '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return neg ? "-" + s : s;
}

// e with 10^e <= |x| < 10^(e+1).
int decimal_exponent(const Rational& x)
{
    const Rational ax = abs(x);
    int e = static_cast<int>(static_cast<double>(approx_log2(ax)) * 0.30102999566398120);
    auto ten_pow = [](int k) {
        return k >= 0 ? Rational(pow10(k)) : Rational(1) / Rational(pow10(-k));
    };
    while (ax < ten_pow(e)) {
        --e;
    }
    while (ax >= ten_pow(e + 1)) {
        ++e;
    }
    return e;
}

std::string render_scientific(const Rational& x, int sig, bool up)
{
    if (x == 0) {
        return "0";
    }
    const int e = decimal_exponent(x);
    const int shift = sig - 1 - e;
    Rational scaled = x;
    if (shift >= 0) {
        scaled *= Rational(pow10(shift));
    } else {
        scaled /= Rational(pow10(-shift));
    }
    Integer mant = up ? ceil(scaled) : floor(scaled);
    int exp10 = e;
    if (abs(mant) >= pow10(sig)) {
        // Rounding carried into a new decade.
        mant = up ? ceil(Rational(mant, 10)) : floor(Rational(mant, 10));
        ++exp10;
    }
    std::string body = render_fixed(mant, sig - 1);
    return body + "e" + std::to_string(exp10);
}

} // namespace

std::string to_decimal_down(const Rational& x, int digits)
{
    return render_fixed(floor(x * Rational(pow10(digits))), digits);
}

std::string to_decimal_up(const Rational& x, int digits)
{
    return render_fixed(ceil(x * Rational(pow10(digits))), digits);
}

std::string to_scientific_down(const Rational& x, int sig)
{
    return render_scientific(x, sig, false);
}

std::string to_scientific_up(const Rational& x, int sig)
{
    return render_scientific(x, sig, true);
}

} // namespace gpade
