#include "gpade/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gpade/dioph.hpp"
#include "gpade/error.hpp"

namespace gpade {

namespace {

Integer isqrt(const Integer& n)
{
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n)
{
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

double log_double(const Rational& x)
{
    return log_interval(x, 64).midpoint().get_d();
}

} // namespace

Integer SqrtExpansion::partial_quotient(std::size_t k) const
{
    if (k == 0) {
        return a0;
    }
    if (k <= preperiod.size()) {
        return preperiod[k - 1];
    }
    return period[(k - 1 - preperiod.size()) % period.size()];
}

SqrtExpansion cf_sqrt(const Rational& d, std::size_t count)
{
    if (d <= 0) {
        throw PreconditionError("cf_sqrt needs d > 0");
    }
    SqrtExpansion e;
    e.d = d;
    e.u = d.get_num();
    e.v = d.get_den();
    const Integer D = e.u * e.v;
    if (is_square(D)) {
        throw PreconditionError("sqrt(d) rational");
    }
    const Integer s = isqrt(D);
    // sqrt(u/v) = sqrt(uv)/v, and Q | D - P^2 holds from the start.
    Integer P = 0;
    Integer Q = e.v;
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    std::vector<Integer> quotients;
    for (std::size_t k = 0;; ++k) {
        if (Q <= 0) {
            throw InternalError("surd algorithm reached a nonpositive denominator");
        }
        if (k > 0) {
            const auto [it, fresh] = seen.emplace(std::make_pair(P, Q), k);
            if (!fresh) {
                const std::size_t start = it->second;
                e.a0 = quotients[0];
                e.preperiod.assign(quotients.begin() + 1, quotients.begin() + static_cast<std::ptrdiff_t>(start));
                e.period.assign(quotients.begin() + static_cast<std::ptrdiff_t>(start), quotients.end());
                break;
            }
        }
        const Integer a = floor_div(P + s, Q);
        quotients.push_back(a);
        P = a * Q - P;
        Q = (D - P * P) / Q;
    }
    Integer a_prev = 1;
    Integer a_cur = e.a0;
    Integer b_prev = 0;
    Integer b_cur = 1;
    for (std::size_t k = 0; k < count; ++k) {
        if (k > 0) {
            const Integer q = e.partial_quotient(k);
            const Integer a_next = q * a_cur + a_prev;
            const Integer b_next = q * b_cur + b_prev;
            a_prev = a_cur;
            a_cur = a_next;
            b_prev = b_cur;
            b_cur = b_next;
        }
        e.convergents.push_back({a_cur, b_cur, e.v * a_cur * a_cur - e.u * b_cur * b_cur});
    }
    return e;
}

std::vector<QuadConvergent> convergents_up_to(const SqrtExpansion& e, const Integer& max_beta)
{
    std::vector<QuadConvergent> out;
    Integer a_prev = 1;
    Integer a_cur = e.a0;
    Integer b_prev = 0;
    Integer b_cur = 1;
    for (std::size_t k = 0; b_cur <= max_beta; ++k) {
        out.push_back({a_cur, b_cur, e.v * a_cur * a_cur - e.u * b_cur * b_cur});
        const Integer q = e.partial_quotient(k + 1);
        const Integer a_next = q * a_cur + a_prev;
        const Integer b_next = q * b_cur + b_prev;
        a_prev = a_cur;
        a_cur = a_next;
        b_prev = b_cur;
        b_cur = b_next;
    }
    return out;
}

PellCheck pell_bound_check(const QuadConvergent& c, const Rational& d, long bits)
{
    PellCheck r;
    r.pell = Rational(c.alpha * c.alpha) - d * Rational(c.beta * c.beta);
    // |pell| <= 2 sqrt(d) + 1  <=>  |pell| - 1 <= 0  or  (|pell| - 1)^2 <= 4d
    const Rational excess = abs(r.pell) - 1;
    r.exact_ok = excess <= 0 || excess * excess <= 4 * d;
    r.bound = IntervalReal(Rational(2)) * sqrt_interval(d, bits) + IntervalReal(Rational(1));
    r.interval_ok = abs(r.pell) <= r.bound.lo();
    return r;
}

Reduction reduce_to_theorem1(const QuadConvergent& c, const Rational& d, long bits)
{
    const Integer u(d.get_num());
    const Integer v(d.get_den());
    Reduction r;
    r.a = v * c.alpha * c.alpha - u * c.beta * c.beta;
    r.b = v * c.alpha * c.alpha;
    if (r.a == 0) {
        throw InternalError("v alpha^2 = u beta^2 contradicts an irrational sqrt(d)");
    }
    const GFunctionSystem f = builtin("binom_power", BuiltinParams{2, Rational(1, 2)});
    const Rational z = make_rational(r.a, r.b);
    const Rational width = Rational(1) / Rational(pow(Integer(2), static_cast<unsigned long>(bits)));
    const Rational scale = make_rational(c.alpha, c.beta);
    IntervalReal fz;
    if (f.C() * abs(z) < 1) {
        fz = eval_certified(f, 1, z, width);
        r.via_series = true;
    } else {
        fz = sqrt_interval(1 - z, bits);
    }
    r.lhs = IntervalReal(scale) * fz;
    r.sqrt_d = sqrt_interval(d, bits);
    r.identity_ok = r.lhs.intersects(r.sqrt_d);

    const long wbits = bits + 32;
    const IntervalReal cd = IntervalReal(Rational(2)) * sqrt_interval(d, wbits) + IntervalReal(Rational(1));
    // b = 1 only for alpha = v = 1; then b > (c1|a|)^c2 fails outright since c1|a| >= 1.
    const ConstantsReport cr = compute_constants(f, r.a, std::max(r.b, Integer(2)), Rational(2), 1, EffectiveConfig{}, bits);
    r.hypothesis = r.b < 2 ? Tri::no : cr.hypothesis3;
    r.log_Nd = IntervalReal(Rational(cr.c2, 2)) * (log_interval(cr.c1, wbits) + log_interval(cd, wbits));
    const IntervalReal log_alpha = log_interval(Rational(c.alpha), wbits);
    r.alpha_above_Nd =
        log_alpha.lo() >= r.log_Nd.hi() ? Tri::yes : (log_alpha.hi() < r.log_Nd.lo() ? Tri::no : Tri::unknown);
    return r;
}

ScanReport theorem5_scan(const Rational& d, const QuadConvergent& c, long m_lo, long m_hi, Denominator which,
                         long bits)
{
    if (m_lo < 1 || m_hi < m_lo) {
        throw PreconditionError("theorem5_scan needs 1 <= m_lo <= m_hi");
    }
    if (is_square(Integer(d.get_num() * d.get_den()))) {
        throw PreconditionError("sqrt(d) rational");
    }
    ScanReport rep;
    rep.d = d;
    rep.den = which == Denominator::alpha ? c.alpha : c.beta;
    if (rep.den < 2) {
        throw PreconditionError("theorem5_scan needs a denominator >= 2");
    }
    const auto count = static_cast<std::size_t>(m_hi - m_lo + 1);
    rep.rows.resize(count);
    const double log_den = log_double(Rational(rep.den));
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < count; ++i) {
        const long m = m_lo + static_cast<long>(i);
        const Integer dm = pow(rep.den, static_cast<unsigned long>(m));
        ScanRow row;
        row.m = m;
        for (long b = bits + static_cast<long>(bit_length(dm)) + 32;; b *= 2) {
            const IntervalReal X = IntervalReal(Rational(dm)) * sqrt_interval(d, b);
            if (const auto n = nearest_integer(X)) {
                row.n = *n;
                row.distance = abs(sqrt_interval(d, b) - IntervalReal(make_rational(row.n, dm)));
                break;
            }
        }
        const double log_dist = log_double(row.distance.midpoint());
        row.exponent = -log_dist / (static_cast<double>(m) * log_den);
        row.eta = std::exp(-log_dist / static_cast<double>(m) - log_den);
        rep.rows[i] = row;
    }
    for (const auto& row : rep.rows) {
        rep.fitted_constant = std::max(rep.fitted_constant, row.eta);
    }
    return rep;
}

} // namespace gpade
