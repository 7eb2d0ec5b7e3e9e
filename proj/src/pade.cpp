#include "gpade/pade.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

namespace {

// Largest p+h accepted; the lcm-based denominators grow like e^(s n).
constexpr long max_order = 20000;

void check_parameters(const GFunctionSystem& sys, long p, long q, long h)
{
    if (!pade_parameters_valid(sys.N(), p, q, h)) {
        throw PreconditionError("Pade parameters need p >= q >= N h >= 0 and q + 1 > N h");
    }
    if (p + h > max_order) {
        throw PreconditionError("p + h exceeds the denominator oracle range");
    }
}

std::size_t leading_index(const IntVector& v)
{
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; }) - v.begin());
}

std::size_t support_size(const IntVector& v)
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; }));
}

// Earlier leading nonzero entry first, then smaller support, so that the empty system yields (1, 0, ..., 0);
// then lexicographic.
bool lex_less(const IntVector& a, const IntVector& b)
{
    const std::size_t la = leading_index(a);
    const std::size_t lb = leading_index(b);
    if (la != lb) {
        return la < lb;
    }
    const std::size_t sa = support_size(a);
    const std::size_t sb = support_size(b);
    if (sa != sb) {
        return sa < sb;
    }
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

bool pade_parameters_valid(std::size_t N, long p, long q, long h)
{
    const long Nh = static_cast<long>(N) * h;
    return h >= 0 && p >= q && q >= Nh && q + 1 > Nh;
}

IntMatrix constraint_matrix(const GFunctionSystem& sys, long p, long q, long h)
{
    check_parameters(sys, p, q, h);
    const Rational dph(sys.denominator(static_cast<std::size_t>(p + h)));
    IntMatrix M;
    for (std::size_t j = 1; j <= sys.N(); ++j) {
        for (long n = p + 1; n <= p + h; ++n) {
            IntVector row(static_cast<std::size_t>(q + 1));
            for (long k = 0; k <= q; ++k) {
                if (n - k < 0) {
                    continue;
                }
                const Rational e = dph * sys.coefficient(j, static_cast<std::size_t>(n - k));
                if (!is_integer(e)) {
                    throw InternalError("d_{p+h} does not clear f_{j,n}");
                }
                row[static_cast<std::size_t>(k)] = e.get_num();
            }
            M.push_back(std::move(row));
        }
    }
    return M;
}

KernelVector small_kernel_vector(const IntMatrix& M, std::size_t cols)
{
    if (cols <= M.size()) {
        throw PreconditionError("small_kernel_vector needs more columns than rows");
    }
    auto basis = integer_kernel_basis(M, cols);
    if (basis.empty()) {
        throw InternalError("zero-dimensional kernel");
    }
    basis = lll_reduce(std::move(basis));
    std::vector<IntVector> candidates;
    for (const auto& b : basis) {
        candidates.push_back(normalize_sign(b));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            IntVector s(cols);
            IntVector d(cols);
            for (std::size_t k = 0; k < cols; ++k) {
                s[k] = basis[i][k] + basis[j][k];
                d[k] = basis[i][k] - basis[j][k];
            }
            candidates.push_back(normalize_sign(std::move(s)));
            candidates.push_back(normalize_sign(std::move(d)));
        }
    }
    const IntVector* best = nullptr;
    Integer best_norm;
    for (const auto& c : candidates) {
        if (is_zero_vector(c)) {
            continue;
        }
        const Integer nrm = max_norm(c);
        if (best == nullptr || nrm < best_norm || (nrm == best_norm && lex_less(c, *best))) {
            best = &c;
            best_norm = nrm;
        }
    }
    if (!is_zero_vector(mat_vec(M, *best))) {
        throw InternalError("kernel reduction produced a non-kernel vector");
    }
    return {*best, basis.size()};
}

IntervalReal siegel_bound(const GFunctionSystem& sys, long p, long q, long h, long bits)
{
    check_parameters(sys, p, q, h);
    const long Nh = static_cast<long>(sys.N()) * h;
    if (Nh == 0) {
        // Exponent 0: the bound is 1 + 1.
        return IntervalReal(Rational(2));
    }
    const long wbits = bits + 32;
    const IntervalReal log_CD = log_interval(sys.C(), wbits) + sys.Dgrowth().log(wbits);
    const IntervalReal inner = log_interval(Rational(q), wbits) + IntervalReal(Rational(p + h + 1)) * log_CD;
    const IntervalReal expo = inner * IntervalReal(Rational(Nh, q + 1 - Nh));
    return (IntervalReal(Rational(1)) + exp_interval(expo, wbits)).rounded(bits);
}

PadeApproximant assemble(const GFunctionSystem& sys, long p, long q, long h, const IntVector& v)
{
    check_parameters(sys, p, q, h);
    if (v.size() != static_cast<std::size_t>(q + 1) || is_zero_vector(v)) {
        throw PreconditionError("assemble needs a nonzero vector of length q+1");
    }
    PadeApproximant a;
    a.p = p;
    a.q = q;
    a.h = h;
    a.v = v;
    a.Q = Poly(std::vector<Rational>(v.begin(), v.end()));
    a.height_Q = poly_height(a.Q);
    const Rational dp(sys.denominator(static_cast<std::size_t>(p)));
    a.integrality_ok = true;
    for (std::size_t j = 1; j <= sys.N(); ++j) {
        // c_n = sum_{k <= min(n, q)} f_{j,n-k} v_k is the coefficient of z^n in Q F_j.
        std::vector<Rational> c(static_cast<std::size_t>(p + h + 1));
        for (long n = 0; n <= p + h; ++n) {
            Rational s = 0;
            for (long k = 0; k <= std::min(n, q); ++k) {
                s += sys.coefficient(j, static_cast<std::size_t>(n - k)) * Rational(v[static_cast<std::size_t>(k)]);
            }
            c[static_cast<std::size_t>(n)] = s;
        }
        for (long n = p + 1; n <= p + h; ++n) {
            if (c[static_cast<std::size_t>(n)] != 0) {
                throw InternalError("kernel vector invalid");
            }
        }
        c.resize(static_cast<std::size_t>(p + 1));
        Poly Pj(std::move(c));
        if (!(Pj * dp).has_integer_coefficients()) {
            a.integrality_ok = false;
        }
        a.P.push_back(std::move(Pj));
        a.order_certificates.push_back(p + h + 1);
    }
    return a;
}

PadeApproximant build_pade(const GFunctionSystem& sys, long p, long q, long h, long bits)
{
    const IntMatrix M = constraint_matrix(sys, p, q, h);
    const KernelVector kv = small_kernel_vector(M, static_cast<std::size_t>(q + 1));
    PadeApproximant a = assemble(sys, p, q, h, kv.v);
    a.kernel_dim = kv.kernel_dim;
    a.siegel_bound = siegel_bound(sys, p, q, h, bits);
    a.siegel_ok = Rational(max_norm(kv.v)) <= a.siegel_bound.lo();
    return a;
}

} // namespace gpade
