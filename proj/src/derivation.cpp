#include "gpade/derivation.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

Poly q_closed_form(const Poly& Q, const Poly& D, long k)
{
    Poly r = Q;
    Poly Dk = Poly::constant(1);
    for (long i = 0; i < k; ++i) {
        r = r.derivative();
        Dk = Dk * D;
    }
    return Dk * r * Rational(1, factorial(static_cast<unsigned long>(k)));
}

namespace {

// Leading coefficients of Q F_j - P scanned up to `target`; returns the count that vanish.
long verified_order(const GFunctionSystem& sys, std::size_t j, const Poly& Q, const Poly& P, long target)
{
    for (long n = 0; n < target; ++n) {
        Rational c = -P.coefficient(static_cast<std::size_t>(n));
        const auto degQ = Q.degree();
        if (degQ) {
            for (long k = 0; k <= std::min<long>(n, static_cast<long>(*degQ)); ++k) {
                c += Q.coefficient(static_cast<std::size_t>(k)) * sys.coefficient(j, static_cast<std::size_t>(n - k));
            }
        }
        if (c != 0) {
            return n;
        }
    }
    return target;
}

bool degree_at_most(const Poly& P, long bound)
{
    return P.is_zero() || static_cast<long>(*P.degree()) <= bound;
}

} // namespace

IteratedFamily iterate(const PadeApproximant& base, const GFunctionSystem& sys, long K)
{
    if (K < 0) {
        throw PreconditionError("iterate needs K >= 0");
    }
    const std::size_t N = sys.N();
    if (base.P.size() != N) {
        throw PreconditionError("approximant does not match the system dimension");
    }
    const Poly& D = sys.D_poly();
    const Poly Dp = D.derivative();
    const auto& DA = sys.cleared_matrix();
    const long d = sys.d();
    const long p = base.p;
    const long q = base.q;
    const long h = base.h;

    IteratedFamily fam;
    fam.base = base;
    fam.K = K;
    std::vector<Poly> S(N + 1);
    S[0] = base.Q;
    for (std::size_t j = 1; j <= N; ++j) {
        S[j] = base.P[j - 1];
    }
    Integer kfact = 1;
    for (long k = 0; k <= K; ++k) {
        if (k > 0) {
            kfact *= k;
        }
        const Rational inv(1, kfact);
        std::vector<Poly> Pk(N);
        const Poly Qk = S[0] * inv;
        for (std::size_t j = 1; j <= N; ++j) {
            Pk[j - 1] = S[j] * inv;
        }
        if (Qk != q_closed_form(base.Q, D, k)) {
            throw InternalError("Q_k from the recurrence disagrees with D^k Q^(k)/k! at k=" + std::to_string(k));
        }
        const long ext = (d - 1) * k;
        bool deg_ok = degree_at_most(Qk, q + ext);
        bool int_ok = Qk.has_integer_coefficients();
        const Rational dpk(sys.denominator(static_cast<std::size_t>(p + ext)));
        std::vector<long> certs(N);
        bool ord_ok = true;
        const long target = std::max<long>(0, p + h + 1 - k);
        for (std::size_t j = 1; j <= N; ++j) {
            deg_ok = deg_ok && degree_at_most(Pk[j - 1], p + ext);
            int_ok = int_ok && (Pk[j - 1] * dpk).has_integer_coefficients();
            certs[j - 1] = verified_order(sys, j, Qk, Pk[j - 1], target);
            ord_ok = ord_ok && certs[j - 1] >= target;
        }
        if (!ord_ok && h >= k * d) {
            throw InternalError("order certificate failed at k=" + std::to_string(k));
        }
        fam.Qk.push_back(Qk);
        fam.Pk.push_back(std::move(Pk));
        fam.degree_ok.push_back(deg_ok);
        fam.integrality_ok.push_back(int_ok);
        fam.order_certs.push_back(std::move(certs));
        fam.order_ok.push_back(ord_ok);

        if (k == K) {
            break;
        }
        // S_{k+1} = D S_k' - k D' S_k - (D A) S_k
        std::vector<Poly> next(N + 1);
        for (std::size_t i = 0; i <= N; ++i) {
            Poly t = D * S[i].derivative() - Dp * S[i] * Rational(k);
            for (std::size_t j = 0; j <= N; ++j) {
                if (!DA[i][j].is_zero() && !S[j].is_zero()) {
                    t -= DA[i][j] * S[j];
                }
            }
            next[i] = std::move(t);
        }
        S = std::move(next);
    }
    return fam;
}

long zero_estimate_ell0(const GFunctionSystem& sys, long q, long h)
{
    const long N = static_cast<long>(sys.N());
    return q - N * (h + 1) + sys.d() * N * (N + 1) / 2;
}

Rational det_rational(std::vector<std::vector<Rational>> M)
{
    const std::size_t n = M.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M[piv][c] == 0) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == 0) {
                continue;
            }
            const Rational f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) {
                M[r][k] -= f * M[c][k];
            }
        }
    }
    return det;
}

Poly det_poly_serial(const std::vector<std::vector<Poly>>& input)
{
    auto M = input;
    const std::size_t n = M.size();
    if (n == 0) {
        return Poly::constant(1);
    }
    Poly prev = Poly::constant(1);
    bool negate = false;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && M[piv][c].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            return {};
        }
        if (piv != c) {
            std::swap(M[piv], M[c]);
            negate = !negate;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < n; ++k) {
                M[r][k] = exact_div(M[c][c] * M[r][k] - M[r][c] * M[c][k], prev);
            }
            M[r][c] = Poly();
        }
        prev = M[c][c];
    }
    Poly det = M[n - 1][n - 1];
    return negate ? -det : det;
}

Poly det_poly_parallel(const std::vector<std::vector<Poly>>& M)
{
    const std::size_t n = M.size();
    if (n == 0) {
        return Poly::constant(1);
    }
    // deg det <= sum over columns of the largest entry degree in that column.
    std::size_t bound = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t col = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (!M[r][c].is_zero()) {
                col = std::max(col, *M[r][c].degree());
            }
        }
        bound += col;
    }
    const std::size_t pts = bound + 1;
    std::vector<Rational> values(pts);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < pts; ++i) {
        const Rational x(static_cast<unsigned long>(i));
        std::vector<std::vector<Rational>> E(n, std::vector<Rational>(n));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                E[r][c] = M[r][c](x);
            }
        }
        values[i] = det_rational(std::move(E));
    }
    // Newton divided differences on the nodes 0, 1, ..., bound.
    std::vector<Rational> dd = values;
    for (std::size_t level = 1; level < pts; ++level) {
        for (std::size_t i = pts - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<unsigned long>(level));
        }
    }
    Poly result;
    for (std::size_t i = pts; i-- > 0;) {
        // result = result * (z - i) + dd[i]
        result = result * Poly(std::vector<Rational>{Rational(-static_cast<long>(i)), Rational(1)}) +
                 Poly::constant(dd[i]);
    }
    return result;
}

ZeroEstimateCheck zero_estimate_check(const IteratedFamily& fam, const GFunctionSystem& sys, bool parallel)
{
    const std::size_t N = sys.N();
    if (fam.K < static_cast<long>(N)) {
        throw PreconditionError("zero estimate needs the family up to k = N");
    }
    std::vector<std::vector<Poly>> M(N + 1, std::vector<Poly>(N + 1));
    for (std::size_t i = 0; i <= N; ++i) {
        for (std::size_t k = 0; k <= N; ++k) {
            M[i][k] = fam.component(i, k);
        }
    }
    ZeroEstimateCheck z;
    z.Delta = parallel ? det_poly_parallel(M) : det_poly_serial(M);
    const long Nl = static_cast<long>(N);
    const long p = fam.base.p;
    const long h = fam.base.h;
    z.required_order = Nl * (p + h + 1) - Nl * (Nl + 1) / 2;
    z.ell0 = zero_estimate_ell0(sys, fam.base.q, h);
    z.nonzero = !z.Delta.is_zero();
    if (!z.nonzero) {
        return z;
    }
    z.vanish_order = static_cast<long>(*z.Delta.valuation());
    if (z.vanish_order < z.required_order) {
        throw InternalError("Delta_N is not divisible by z^" + std::to_string(z.required_order));
    }
    z.DeltaTilde = z.Delta.shifted_down(static_cast<std::size_t>(z.vanish_order));
    z.degree_ok = static_cast<long>(*z.Delta.degree()) - z.required_order <= z.ell0;
    return z;
}

long find_nonvanishing_index(const IteratedFamily& fam, const GFunctionSystem& sys, const Integer& a,
                             const Integer& b, const Integer& n, const Integer& B, long m, std::size_t j)
{
    if (a == 0 || b == 0) {
        throw PreconditionError("a/b must be nonzero");
    }
    const Rational z = make_rational(a, b);
    if (sys.D_poly()(z) == 0) {
        throw PreconditionError("a/b is a root of D");
    }
    if (j < 1 || j > sys.N() || m < 0) {
        throw PreconditionError("find_nonvanishing_index: j out of range or m < 0");
    }
    const Rational Bbm(B * pow(abs(b), static_cast<unsigned long>(m)));
    const Rational nr(n);
    for (long k = 0; k <= fam.K; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        if (nr * fam.Qk[uk](z) - Bbm * fam.Pk[uk][j - 1](z) != 0) {
            return k;
        }
    }
    if (fam.K >= static_cast<long>(sys.N()) + zero_estimate_ell0(sys, fam.base.q, fam.base.h)) {
        throw InternalError("rank deficiency");
    }
    throw PreconditionError("family too short to locate a nonvanishing index");
}

} // namespace gpade
