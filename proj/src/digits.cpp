#include "gpade/digits.hpp"

#include <cmath>

#include "gpade/dioph.hpp"
#include "gpade/error.hpp"

namespace gpade {

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Splits A = floor(x b^L) into the integer part and L fractional digits.
DigitString decompose(const Integer& A, const Integer& b, std::size_t L)
{
    DigitString ds;
    ds.base = b;
    const Integer bL = pow(b, static_cast<unsigned long>(L));
    ds.integer_part = floor_div(A, bL);
    Integer rest = A - ds.integer_part * bL;
    ds.digits.assign(L, 0);
    for (std::size_t i = L; i-- > 0;) {
        Integer r;
        mpz_tdiv_qr(rest.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
        ds.digits[i] = static_cast<unsigned>(r.get_ui());
    }
    ds.certified_len = L;
    return ds;
}

void check_base(const Integer& b)
{
    if (b < 2 || !b.fits_uint_p()) {
        throw PreconditionError("digit base must satisfy 2 <= b < 2^32");
    }
}

Rational pow2_neg(long bits)
{
    return Rational(1) / Rational(pow(Integer(2), static_cast<unsigned long>(bits)));
}

} // namespace

std::string DigitString::to_string() const
{
    const bool small = base <= 10;
    std::string s;
    for (std::size_t i = 0; i < certified_len; ++i) {
        if (small) {
            s += static_cast<char>('0' + digits[i]);
        } else {
            s += (i > 0 ? "," : "") + std::to_string(digits[i]);
        }
    }
    return s;
}

Integer DigitString::prefix_value(std::size_t k) const
{
    if (k > certified_len) {
        throw PreconditionError("prefix beyond the certified digits");
    }
    Integer v = integer_part;
    for (std::size_t i = 0; i < k; ++i) {
        v = v * base + digits[i];
    }
    return v;
}

DigitString digits_of_rational(const Rational& x, const Integer& b, std::size_t count)
{
    check_base(b);
    return decompose(floor(x * Rational(pow(b, static_cast<unsigned long>(count)))), b, count);
}

DigitString expand_digits(const Producer& value, const Integer& b, std::size_t count, long max_bits)
{
    check_base(b);
    const long bits0 = static_cast<long>(count * bit_length(b)) + 32;
    if (max_bits <= 0) {
        max_bits = 4 * bits0;
    }
    const Rational scale(pow(b, static_cast<unsigned long>(count)));
    DigitString best;
    best.base = b;
    for (long cur = bits0;; cur *= 2) {
        const IntervalReal x = interval_refine(value, pow2_neg(cur));
        const DigitString lo = decompose(floor(x.lo() * scale), b, count);
        const DigitString hi = decompose(floor(x.hi() * scale), b, count);
        DigitString out = lo;
        if (lo.integer_part != hi.integer_part) {
            out.certified_len = 0;
        } else {
            std::size_t i = 0;
            while (i < count && lo.digits[i] == hi.digits[i]) {
                ++i;
            }
            out.certified_len = i;
        }
        out.digits.resize(out.certified_len);
        best = std::move(out);
        if (best.certified_len == count || cur * 2 > max_bits) {
            return best;
        }
    }
}

long repetition_count(const DigitString& ds, std::size_t t, std::size_t n)
{
    if (t < 1 || n < 1) {
        throw PreconditionError("repetition_count needs t >= 1 and n >= 1");
    }
    if (n + t - 1 > ds.certified_len) {
        throw PreconditionError("extend expansion");
    }
    long l = 1;
    for (std::size_t pos = n + t;; pos += t, ++l) {
        for (std::size_t i = 0; i < t; ++i) {
            if (pos + i > ds.certified_len) {
                throw PreconditionError("extend expansion");
            }
            if (ds.digit(pos + i) != ds.digit(n + i)) {
                return l;
            }
        }
    }
}

Theorem2Convergent theorem2_convergent(const DigitString& ds, const Producer& xi, std::size_t t, std::size_t n)
{
    Theorem2Convergent c;
    c.repetitions = repetition_count(ds, t, n);
    const Integer& b = ds.base;
    const Integer bt1 = pow(b, static_cast<unsigned long>(t)) - 1;
    c.q = pow(b, static_cast<unsigned long>(n - 1)) * bt1;
    Integer block = 0;
    for (std::size_t i = 0; i < t; ++i) {
        block = block * b + ds.digit(n + i);
    }
    c.p = bt1 * ds.prefix_value(n - 1) + block;
    const auto M = static_cast<unsigned long>(n + t * static_cast<std::size_t>(c.repetitions));
    c.bound = Rational(b - 1) / Rational(pow(b, M));
    const Rational match_bound = Rational(1) / Rational(pow(b, M - 1));
    const Rational pq = make_rational(c.p, c.q);
    for (const long extra : {32L, 128L}) {
        const IntervalReal x = interval_refine(xi, c.bound * pow2_neg(extra));
        const Rational diff_hi = abs(x - IntervalReal(pq)).hi();
        c.bound_ok = diff_hi <= c.bound;
        c.digit_match_ok = diff_hi <= match_bound;
        if (c.bound_ok) {
            break;
        }
    }
    if (!c.digit_match_ok) {
        throw InternalError("p_n/q_n does not share the certified digits of xi");
    }
    return c;
}

RepetitionProfile repetition_profile(const DigitString& ds, const Producer& xi, std::size_t t, std::size_t window)
{
    RepetitionProfile prof;
    prof.t = t;
    prof.max_ratio = 0;
    for (std::size_t n = 1; n <= window; ++n) {
        const long v = repetition_count(ds, t, n);
        prof.values.push_back(v);
        const Rational ratio(v, static_cast<unsigned long>(n));
        if (ratio > prof.max_ratio) {
            prof.max_ratio = ratio;
            prof.argmax = n;
        }
    }
    const Integer& b = ds.base;
    const IntervalReal x =
        interval_refine(xi, Rational(1) / Rational(pow(b, static_cast<unsigned long>(window + 64))));
    const double log_b = std::log(b.get_d());
    prof.empirical_vb = -1;
    for (std::size_t m = 1; m <= window; ++m) {
        const Rational y = x.midpoint() * Rational(pow(b, static_cast<unsigned long>(m)));
        const Rational dist = abs(y - Rational(floor(y + Rational(1, 2))));
        if (dist == 0) {
            continue;
        }
        const double log_dist = log_interval(dist, 64).midpoint().get_d();
        prof.empirical_vb = std::max(prof.empirical_vb, -log_dist / (static_cast<double>(m) * log_b) - 1);
    }
    return prof;
}

Theorem2Report theorem2_bound_check(const GFunctionSystem& sys, const Integer& a, const Integer& b, long s,
                                    std::size_t t, const Rational& eps, std::size_t window, long bits)
{
    if (a == 0 || s < 1 || t < 1 || window < 1 || eps <= 0) {
        throw PreconditionError("theorem2_bound_check needs a != 0, s >= 1, t >= 1, window >= 1, eps > 0");
    }
    check_base(b);
    const Integer bs = pow(b, static_cast<unsigned long>(s));
    const Rational z = make_rational(a, bs);
    if (sys.C() * abs(z) >= 1) {
        throw PreconditionError("no convergent tail bound: C|a|/b^s >= 1");
    }
    Theorem2Report r;
    r.system = sys.key();
    r.a = a;
    r.b = b;
    r.s = s;
    r.t = t;
    r.eps = eps;
    r.window = window;
    const Producer xi = value_producer(sys, sys.N(), z);
    for (std::size_t count = window + 64 * t;; count *= 2) {
        r.digits = expand_digits(xi, b, count);
        try {
            r.profile = repetition_profile(r.digits, xi, t, window);
            break;
        } catch (const PreconditionError&) {
            if (r.digits.certified_len < count) {
                throw;
            }
        }
    }
    r.empirical_ok = r.profile.max_ratio <= eps / Rational(static_cast<unsigned long>(t));

    const ConstantsReport cr =
        compute_constants(sys, a, bs, Rational(static_cast<long>(t), s), 1, EffectiveConfig{}, bits);
    r.threshold_chi = cr.hypothesis3;
    const long wbits = bits + 64;
    const IntervalReal margin = log_interval(Rational(bs), wbits) -
                                IntervalReal(2 / eps) * cr.c4 * log_interval(Rational(abs(a) + 1), wbits);
    r.threshold_eps = margin.lo() >= 0 ? Tri::yes : (margin.hi() < 0 ? Tri::no : Tri::unknown);
    return r;
}

} // namespace gpade
