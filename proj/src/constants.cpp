#include "gpade/constants.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

namespace {

IntervalReal iv(const Rational& r)
{
    return IntervalReal(r);
}

ExpProduct CD_product(const GFunctionSystem& sys)
{
    return ExpProduct::rational(sys.C()) * sys.Dgrowth();
}

void require_verified(const GFunctionSystem& sys, long n)
{
    if (sys.verified_range() < n) {
        throw PreconditionError("growth constants verified only up to n=" + std::to_string(sys.verified_range()) +
                                ", need " + std::to_string(n));
    }
}

// (q (C D)^(p+h+1))^(Nh/(q+1-Nh)), enclosed.
IntervalReal siegel_power(const GFunctionSystem& sys, long p, long q, long h, long bits)
{
    const long Nh = static_cast<long>(sys.N()) * h;
    if (Nh == 0) {
        return iv(1);
    }
    const IntervalReal L = log_interval(Rational(q), bits) + iv(Rational(p + h + 1)) * CD_product(sys).log(bits);
    return exp_interval(L * iv(Rational(Nh, q + 1 - Nh)), bits);
}

} // namespace

Rational bound_height_Qk(const PadeApproximant& approx, const GFunctionSystem& sys, long k, long bits)
{
    if (k < 0) {
        throw PreconditionError("bound_height_Qk needs k >= 0");
    }
    require_verified(sys, approx.p + approx.h);
    const long wbits = bits + 32;
    const Rational lead = Rational(pow(Integer(2), static_cast<unsigned long>(2 * approx.q + (sys.d() - 1) * k + 1))) *
                          pow(sys.height_D(), k);
    return lead * siegel_power(sys, approx.p, approx.q, approx.h, wbits).hi();
}

Rational bound_remainder(const IteratedFamily& fam, const GFunctionSystem& sys, long k, const Rational& z)
{
    if (k < 0 || k > fam.K) {
        throw PreconditionError("bound_remainder: k outside the computed family");
    }
    const long p = fam.base.p;
    const long q = fam.base.q;
    const long h = fam.base.h;
    if (k > p + h + 1) {
        throw PreconditionError("bound_remainder needs k <= p+h+1");
    }
    const Rational Cz = sys.C() * abs(z);
    if (Cz >= 1) {
        throw PreconditionError("bound_remainder needs C|z| < 1");
    }
    const long qk = q + k * (sys.d() - 1);
    const Rational maxC = std::max(Rational(1), sys.C());
    return poly_height(fam.Qk[static_cast<std::size_t>(k)]) * Rational(qk + 1) * pow(maxC, std::max<long>(qk, 1)) *
           pow(Cz, p + h + 1 - k) / (1 - Cz);
}

Producer remainder_producer(const IteratedFamily& fam, const GFunctionSystem& sys, std::size_t j, long k,
                            const Rational& z)
{
    if (k < 0 || k > fam.K || j < 1 || j > sys.N()) {
        throw PreconditionError("remainder_producer: index out of range");
    }
    const Poly Qk = fam.Qk[static_cast<std::size_t>(k)];
    const Poly Pjk = fam.Pk[static_cast<std::size_t>(k)][j - 1];
    const std::size_t qdeg = Qk.is_zero() ? 0 : *Qk.degree() + 1;
    const std::size_t pdeg = Pjk.is_zero() ? 0 : *Pjk.degree() + 1;
    auto coeff = [&sys, Qk, Pjk, qdeg, j](std::size_t n) {
        Rational c = -Pjk.coefficient(n);
        for (std::size_t l = 0; l < qdeg && l <= n; ++l) {
            c += Qk.coefficient(l) * sys.coefficient(j, n - l);
        }
        return c;
    };
    // For n beyond deg P_{j,k}: |r_n| <= H(Q_k) (deg Q_k + 1) C^(n+1).
    const Rational scale = poly_height(Qk) * Rational(static_cast<unsigned long>(std::max<std::size_t>(qdeg, 1)));
    return series_producer(coeff, z, scale, sys.C(), pdeg);
}

IntervalReal reference_c4_dilog(long bits)
{
    const long wbits = bits + 32;
    const IntervalReal l2 = log2_interval(wbits);
    return (iv(Rational(1201779, 48)) + iv(Rational(1185019, 3)) / l2 + iv(396) * l2).rounded(bits);
}

namespace {

ConstantsReport compute_once(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Rational& t, long m,
                             const EffectiveConfig& config, long bits, bool& ambiguous)
{
    ambiguous = false;
    const long N = static_cast<long>(sys.N());
    const long d = sys.d();
    const Rational H = sys.height_D();
    const long wbits = bits + 64;

    ConstantsReport r;
    r.system = sys.key();
    r.a = a;
    r.b = b;
    r.t = t;
    r.m = m;
    r.config = config;
    r.bits = bits;

    const ExpProduct CD = CD_product(sys);
    r.chi_exact = ExpProduct::rational(4 * H) * CD.pow(Rational(8 * N * d + 1)) * ExpProduct::rational(sys.C());
    r.chi = r.chi_exact.value(bits);
    r.c1 = r.chi;
    r.c2 = 3 * (N + 2);
    r.c5 = std::max({config.h0, config.h1, config.h2, Rational(8 * N * N * d * d * d), Rational(4 * t)});
    r.c3 = r.c5 / 3;
    r.c6_exact = sys.Dgrowth().pow(1 + Rational(d, (N + 2) * (d + 1))) *
                 ExpProduct::rational(2).pow(Rational(8 * N + 1, 4 * N + 8)) *
                 ExpProduct::rational(H).pow(Rational(1, 4 * (N + 2) * (d + 1))) *
                 CD.pow(Rational(4 * N * (N + 3) * (d + 1), N + 2));
    r.c6 = r.c6_exact.value(bits);

    const IntervalReal l2 = log2_interval(wbits);
    const IntervalReal log_c1 = r.chi_exact.log(wbits);
    const IntervalReal log_c6 = r.c6_exact.log(wbits);
    const IntervalReal c7 = iv(Rational(6 * (N + 2) * (N + 2))) * log_c1;
    const IntervalReal c8 = (l2 + log_c6) / l2 * c7;
    r.c7 = c7.rounded(bits);
    r.c8 = c8.rounded(bits);
    r.c4 = (c8 + log_c6 / l2).rounded(bits);

    r.y = Rational(1, 4 * (d + 1));
    const IntervalReal log_b = log_interval(Rational(b), wbits);
    const IntervalReal log_chi_a = log_c1 + log_interval(Rational(abs(a)), wbits);
    const IntervalReal x = log_b / (iv(3) * log_chi_a);
    r.x = x.rounded(bits);

    const IntervalReal margin = log_b - iv(Rational(r.c2)) * log_chi_a;
    r.hypothesis3 = margin.positive() ? Tri::yes : (margin.hi() <= 0 ? Tri::no : Tri::unknown);
    if (r.hypothesis3 == Tri::unknown) {
        ambiguous = true;
    }

    const IntervalReal gap = x - iv(Rational(N + 1));
    if (gap.positive()) {
        const auto h = common_floor(iv(Rational(m)) / gap);
        if (!h) {
            ambiguous = true;
        } else {
            r.h = h->get_si();
            const auto p = common_floor(x * iv(Rational(*r.h)));
            if (!p) {
                ambiguous = true;
            } else {
                r.p = p->get_si();
            }
            r.q = floor((N + r.y) * Rational(*r.h)).get_si();
            if (*r.h > 0) {
                r.beta = exp_interval(iv(t / Rational(*r.h)) * log_b, bits);
            }
        }
    } else if (!gap.negative() && gap.hi() > 0) {
        ambiguous = true;
    }

    if (sys.key() == "polylog2" && sys.C() == 1 && sys.Dgrowth() == ExpProduct::exp(2) && H == 1) {
        const IntervalReal ref = reference_c4_dilog(bits);
        r.c4_reference = ref;
        r.c4_discrepancy = !(abs(r.c4 - ref).hi() <= ref.lo() / 100);
    }
    r.eqhyp = check_eqhyp(r, sys, a, b, bits);
    return r;
}

} // namespace

ConstantsReport compute_constants(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Rational& t,
                                  long m, const EffectiveConfig& config, long bits, bool strict, long max_bits)
{
    if (a == 0 || b < 2 || t < 0 || m < 1) {
        throw PreconditionError("compute_constants needs a != 0, b >= 2, t >= 0, m >= 1");
    }
    ConstantsReport r;
    for (long cur = bits;; cur *= 2) {
        bool ambiguous = false;
        r = compute_once(sys, a, b, t, m, config, cur, ambiguous);
        if (!ambiguous || cur * 2 > max_bits) {
            break;
        }
    }
    if (strict && !r.h) {
        throw HypothesisError("hypothesis (3) fails: b is too small against (c1 |a|)^c2");
    }
    return r;
}

Tri check_eqhyp(const ConstantsReport& r, const GFunctionSystem& sys, const Integer& a, const Integer& b, long bits)
{
    const long N = static_cast<long>(sys.N());
    const long d = sys.d();
    const Rational& y = r.y;
    if (y < Rational(1, 8 * d)) {
        throw PreconditionError("the parameter condition needs y >= 1/(8d)");
    }
    const long wbits = bits + 64;
    const IntervalReal l2 = log2_interval(wbits);
    const IntervalReal logH = log_interval(sys.height_D(), wbits);
    const IntervalReal logC = log_interval(sys.C(), wbits);
    const IntervalReal logD = sys.Dgrowth().log(wbits);
    const IntervalReal loga = log_interval(Rational(abs(a)), wbits);
    const IntervalReal logb = log_interval(Rational(b), wbits);
    const IntervalReal& x = r.x;
    const IntervalReal one = iv(1);

    IntervalReal L = iv(2 * (N + y) + (d - 1) * y) * l2 + iv(y) * logH +
                     (x + one) * iv(Rational(N) / y) * (logC + logD) + iv(N + d * y) * logC +
                     (x + one - iv(y)) * (logC + loga - logb) + (x + iv(d * y)) * (logb + logD);
    const IntervalReal threshold = -l2;
    if (!r.beta) {
        // log beta >= 0 is dropped, so L is only a lower bound here.
        return L.lo() >= threshold.hi() ? Tri::no : Tri::unknown;
    }
    L = L + iv(r.t / Rational(*r.h)) * logb;
    if (certainly_less(L, threshold)) {
        return Tri::yes;
    }
    if (L.lo() >= threshold.hi()) {
        return Tri::no;
    }
    return Tri::unknown;
}

} // namespace gpade
