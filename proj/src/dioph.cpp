#include "gpade/dioph.hpp"

#include "gpade/error.hpp"

namespace gpade {

namespace {

IntervalReal iv(const Rational& r)
{
    return IntervalReal(r);
}

Rational pow2_neg(long bits)
{
    return Rational(1) / Rational(pow(Integer(2), static_cast<unsigned long>(bits)));
}

Integer as_integer(const Rational& r, const char* what)
{
    if (!is_integer(r)) {
        throw InternalError(std::string(what) + " is not an integer");
    }
    return r.get_num();
}

// Smallest integer t >= 0 with B <= b^t.
Rational least_exponent(const Integer& B, const Integer& b)
{
    long t = 0;
    Integer acc = 1;
    while (acc < B) {
        acc *= b;
        ++t;
    }
    return t;
}

Tri tri_and(Tri x, Tri y)
{
    if (x == Tri::no || y == Tri::no) {
        return Tri::no;
    }
    if (x == Tri::unknown || y == Tri::unknown) {
        return Tri::unknown;
    }
    return Tri::yes;
}

// x >= y for enclosures.
Tri tri_ge(const IntervalReal& x, const IntervalReal& y)
{
    if (x.lo() >= y.hi()) {
        return Tri::yes;
    }
    if (x.hi() < y.lo()) {
        return Tri::no;
    }
    return Tri::unknown;
}

} // namespace

Producer value_producer(const GFunctionSystem& sys, std::size_t j, const Rational& z)
{
    if (j < 1 || j > sys.N()) {
        throw PreconditionError("function index j out of range");
    }
    return series_producer([&sys, j](std::size_t n) { return sys.coefficient(j, n); }, z, Rational(1), sys.C());
}

IntervalReal eval_certified(const GFunctionSystem& sys, std::size_t j, const Rational& z, const Rational& width)
{
    if (z == 0) {
        return iv(sys.coefficient(j, 0));
    }
    return interval_refine(value_producer(sys, j, z), width);
}

std::optional<Integer> nearest_integer(const IntervalReal& x)
{
    if (x.is_point()) {
        const Integer fl = floor(x.lo());
        const Rational frac = x.lo() - Rational(fl);
        if (frac == Rational(1, 2)) {
            return fl % 2 == 0 ? fl : Integer(fl + 1);
        }
        return floor(x.lo() + Rational(1, 2));
    }
    return common_floor(x + iv(Rational(1, 2)));
}

XiWitness construct_xi(const IteratedFamily& fam, const GFunctionSystem& sys, const Integer& a, const Integer& b,
                       const Integer& B, long m, const Integer& n, std::size_t j)
{
    const long p = fam.base.p;
    const long q = fam.base.q;
    if (p < q + m) {
        throw PreconditionError("construct_xi needs p >= q + m");
    }
    XiWitness w;
    w.k = find_nonvanishing_index(fam, sys, a, b, n, B, m, j);
    const auto uk = static_cast<std::size_t>(w.k);
    const long ext = (sys.d() - 1) * w.k;
    const long e = p + ext;
    const Rational z = make_rational(a, b);
    const Rational Qv = fam.Qk[uk](z);
    const Rational Pv = fam.Pk[uk][j - 1](z);
    const Integer de = sys.denominator(static_cast<std::size_t>(e));
    const Integer be = pow(b, static_cast<unsigned long>(e));
    const Integer bm = pow(b, static_cast<unsigned long>(m));
    w.V = as_integer(Qv * Rational(pow(b, static_cast<unsigned long>(q + ext))), "b^(q+(d-1)k) Q_k(a/b)");
    w.U = as_integer(Pv * Rational(de * be), "d_e b^e P_{j,k}(a/b)");
    w.xi = n * de * pow(b, static_cast<unsigned long>(p - q)) * w.V - B * bm * w.U;
    w.xi_direct = as_integer(Rational(de * be) * (Rational(n) * Qv - Rational(B * bm) * Pv), "xi");
    if (w.xi != w.xi_direct) {
        throw InternalError("the two computations of xi disagree");
    }
    if (w.xi == 0) {
        throw InternalError("xi vanishes at the selected index");
    }
    w.divisible_by_bm = w.xi % bm == 0;
    return w;
}

ChainReplay replay_chain(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Integer& B, long m,
                         const Integer& n, std::size_t j, long p, long q, long h, long bits)
{
    if (a <= 0) {
        throw PreconditionError("replay_chain expects a > 0; reflect the system for a < 0");
    }
    const PadeApproximant approx = build_pade(sys, p, q, h);
    const long K = static_cast<long>(sys.N()) + zero_estimate_ell0(sys, q, h);
    const IteratedFamily fam = iterate(approx, sys, K);

    ChainReplay c;
    c.p = p;
    c.q = q;
    c.h = h;
    c.xi = construct_xi(fam, sys, a, b, B, m, n, j);
    const long k = c.xi.k;
    const long e = p + (sys.d() - 1) * k;
    const Rational z = make_rational(a, b);
    const Rational de(sys.denominator(static_cast<std::size_t>(e)));
    const Rational be(pow(b, static_cast<unsigned long>(e)));
    const Rational bm(pow(b, static_cast<unsigned long>(m)));
    const Rational Bbm = Rational(B) * bm;
    c.Qk_value = fam.Qk[static_cast<std::size_t>(k)](z);
    c.r_threshold = Rational(1) / (2 * de * be * Rational(B));

    const Producer R = remainder_producer(fam, sys, j, k, z);
    IntervalReal Rv;
    for (const long shift : {2L, 20L, 64L}) {
        Rv = interval_refine(R, c.r_threshold * pow2_neg(shift));
        c.R_abs = abs(Rv);
        if (c.R_abs.hi() < c.r_threshold || c.R_abs.lo() >= c.r_threshold) {
            break;
        }
    }
    c.remainder_small = c.R_abs.hi() < c.r_threshold;

    const Rational X = Rational(c.xi.xi) / (de * be);
    const IntervalReal identity_rhs = iv(X) - iv(Bbm) * Rv;
    c.gap_rhs = iv(bm / (de * be)) - iv(Bbm) * c.R_abs;
    if (c.Qk_value != 0) {
        c.lower_bound = Rational(1) / (de * be * 2 * Rational(B) * abs(c.Qk_value));
    }
    const Rational target = Rational(n) / Bbm;
    const Producer F = value_producer(sys, j, z);
    Rational width = c.Qk_value != 0 ? c.lower_bound / 1024 : pow2_neg(bits);
    for (int attempt = 0; attempt < 4; ++attempt, width /= Rational(pow(Integer(2), 64UL))) {
        const IntervalReal Fv = interval_refine(F, std::min(width, pow2_neg(bits)));
        const IntervalReal dist = abs(Fv - iv(target));
        c.gap_lhs = iv(abs(c.Qk_value)) * iv(Bbm) * dist;
        const IntervalReal identity_lhs = iv(c.Qk_value) * (iv(Rational(n)) - iv(Bbm) * Fv);
        c.identity_ok = identity_lhs.intersects(identity_rhs);
        c.lower_bound_ok = c.Qk_value != 0 && dist.lo() >= c.lower_bound;
        if (c.lower_bound_ok || c.Qk_value == 0) {
            break;
        }
    }
    c.gap_ok = c.identity_ok && abs(c.xi.xi) >= bm.get_num() && c.gap_rhs.positive();
    return c;
}

Integer nearest_numerator(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Integer& B, long m,
                          std::size_t j, long bits, long max_bits)
{
    if (b < 2 || B < 1 || m < 0) {
        throw PreconditionError("nearest_numerator needs b >= 2, B >= 1, m >= 0");
    }
    const Rational scale(B * pow(b, static_cast<unsigned long>(m)));
    const Producer F = value_producer(sys, j, make_rational(a, b));
    for (long cur = bits; cur <= max_bits; cur *= 2) {
        const IntervalReal X = iv(scale) * interval_refine(F, pow2_neg(cur) / scale);
        if (auto n = nearest_integer(X)) {
            return *n;
        }
    }
    throw PreconditionError("nearest integer not resolved within the precision cap");
}

VerifyReport verify_theorem1(const GFunctionSystem& sys_in, const Integer& a_in, const Integer& b, const Integer& B,
                             long m, const Integer& n, const VerifyOptions& opt)
{
    if (a_in == 0 || b < 2 || B < 1 || m < 1) {
        throw PreconditionError("verify needs a != 0, b >= 2, B >= 1, m >= 1");
    }
    if (opt.j < 1 || opt.j > sys_in.N()) {
        throw PreconditionError("function index j out of range");
    }
    VerifyReport r;
    r.a = a_in;
    r.b = b;
    r.B = B;
    r.n = n;
    r.m = m;
    r.j = opt.j;
    r.property_mode = opt.property_mode;
    r.reflected = a_in < 0;
    // F(a/b) for a < 0 is G(|a|/b) with G(z) = F(-z).
    const GFunctionSystem sys = r.reflected ? sys_in.reflected() : sys_in;
    const Integer a = abs(a_in);
    r.system = sys_in.key();
    r.t = opt.t ? *opt.t : least_exponent(B, b);
    if (r.t < 0) {
        throw PreconditionError("t must be >= 0");
    }

    r.constants = compute_constants(sys, a, b, r.t, m, opt.config, opt.bits, false, opt.max_bits);
    const long wbits = opt.bits + 64;
    const IntervalReal log_b = log_interval(Rational(b), wbits);
    const IntervalReal log_a1 = log_interval(Rational(a + 1), wbits);
    const IntervalReal log_B = log_interval(Rational(B), wbits);
    const Tri B_ok = tri_ge(iv(r.t) * log_b, log_B);
    const Tri m_ok = tri_ge(iv(Rational(m)) * log_a1, iv(r.constants.c3) * log_b);
    r.hypotheses = tri_and(r.constants.hypothesis3, tri_and(B_ok, m_ok));
    if (r.hypotheses != Tri::yes && !opt.property_mode) {
        throw HypothesisError("hypotheses b > (c1|a|)^c2, B <= b^t, m >= c3 log b / log(|a|+1) not certified");
    }

    const Rational z = make_rational(a, b);
    if (sys.C() * z >= 1) {
        throw PreconditionError("no convergent tail bound: C|a/b| >= 1");
    }
    const Rational target = Rational(n) / Rational(B * pow(b, static_cast<unsigned long>(m)));
    const Producer F = value_producer(sys, opt.j, z);
    for (long cur = opt.bits;; cur *= 2) {
        r.value = interval_refine(F, pow2_neg(cur));
        r.lhs = abs(r.value - iv(target));
        if (r.lhs.lo() > 0 || cur * 2 > opt.max_bits) {
            break;
        }
    }
    r.log_rhs = -(log_B + iv(Rational(m)) * log_b + r.constants.c4 * iv(Rational(m)) * log_a1);
    if (r.lhs.lo() > 0) {
        const IntervalReal log_lo = log_interval(r.lhs.lo(), wbits);
        const IntervalReal log_hi = log_interval(r.lhs.hi(), wbits);
        if (log_lo.lo() >= r.log_rhs.hi()) {
            r.holds = Tri::yes;
        } else if (log_hi.hi() < r.log_rhs.lo()) {
            r.holds = Tri::no;
            r.reason = "distance below the lower bound";
        } else {
            r.reason = "enclosure straddles the lower bound";
        }
    } else {
        r.reason = "enclosure of F(a/b) still contains n/(B b^m) at the precision cap";
    }

    if (opt.epsilon) {
        const Rational& eps = *opt.epsilon;
        if (eps <= 0) {
            throw PreconditionError("epsilon must be positive");
        }
        r.epsilon = eps;
        const Tri m_eps = Rational(m) >= 2 * r.t / eps ? Tri::yes : Tri::no;
        const IntervalReal margin = log_b - iv(2 / eps) * r.constants.c4 * log_a1;
        const Tri b_eps = margin.positive() ? Tri::yes : (margin.hi() <= 0 ? Tri::no : Tri::unknown);
        r.corollary_hypotheses = tri_and(m_eps, b_eps);
        const IntervalReal log_bound = -(iv(Rational(m) * (1 + eps)) * log_b);
        if (r.lhs.lo() > 0) {
            if (log_interval(r.lhs.lo(), wbits).lo() >= log_bound.hi()) {
                r.corollary_holds = Tri::yes;
            } else if (log_interval(r.lhs.hi(), wbits).hi() < log_bound.lo()) {
                r.corollary_holds = Tri::no;
            }
        }
    }

    if (opt.property_mode) {
        const long N = static_cast<long>(sys.N());
        std::optional<ChainReplay> last;
        auto attempt = [&](long p, long q, long h) {
            if (!pade_parameters_valid(sys.N(), p, q, h) || p < q + m || h < 1) {
                return false;
            }
            last = replay_chain(sys, a, b, B, m, n, opt.j, p, q, h, opt.bits);
            return last->ok();
        };
        bool found = false;
        if (opt.p && opt.q && opt.h) {
            found = attempt(*opt.p, *opt.q, *opt.h);
        } else {
            for (long h = opt.h ? *opt.h : 1; h <= (opt.h ? *opt.h : opt.max_h) && !found; ++h) {
                const long q = opt.q ? *opt.q : N * h;
                for (long p = q + m; p <= q + m + opt.p_slack && !found; ++p) {
                    found = attempt(p, q, h);
                }
            }
        }
        r.chain = last;
        if (!found && r.reason.empty()) {
            r.reason = last ? "chain replay not certified at the searched parameters" : "no admissible (p, q, h)";
        }
    }
    return r;
}

} // namespace gpade
