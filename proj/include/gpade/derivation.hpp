#pragma once

#include <optional>
#include <vector>

#include "gpade/pade.hpp"

namespace gpade {

// (Q_k; P_{1,k}, ..., P_{N,k}) = (1/k!) D^k (d/dz - A)^k (Q; P_1, ..., P_N), k = 0..K.
struct IteratedFamily {
    PadeApproximant base;
    long K = 0;
    std::vector<Poly> Qk;
    std::vector<std::vector<Poly>> Pk;  // Pk[k][j-1]
    // deg Q_k <= q+(d-1)k and deg P_{j,k} <= p+(d-1)k
    std::vector<bool> degree_ok;
    // Q_k in Z[z] and d_{p+(d-1)k} P_{j,k} in Z[z]
    std::vector<bool> integrality_ok;
    // order_certs[k][j-1]: number of leading coefficients of Q_k F_j - P_{j,k} verified to vanish,
    // scanned up to p+h+1-k.
    std::vector<std::vector<long>> order_certs;
    // Every j reaches p+h+1-k.
    std::vector<bool> order_ok;

    // Column k of the zero-estimate determinant: (Q_k, P_{1,k}, ..., P_{N,k}).
    [[nodiscard]] Poly component(std::size_t i, std::size_t k) const { return i == 0 ? Qk[k] : Pk[k][i - 1]; }
};

// Throws InternalError if the S-recurrence and the closed form for Q_k disagree, or if the order
// certificate fails for some k with h >= k d.
IteratedFamily iterate(const PadeApproximant& base, const GFunctionSystem& sys, long K);

// (1/k!) D^k Q^(k)
Poly q_closed_form(const Poly& Q, const Poly& D, long k);

struct ZeroEstimateCheck {
    Poly Delta;
    // N(p+h+1) - N(N+1)/2
    long required_order = 0;
    // Actual valuation of Delta (meaningful when nonzero).
    long vanish_order = 0;
    // Delta / z^vanish_order
    Poly DeltaTilde;
    // q - N(h+1) + d N(N+1)/2
    long ell0 = 0;
    // deg Delta - required_order <= ell0
    bool degree_ok = false;
    bool nonzero = false;
};

// Throws InternalError if Delta is nonzero but z^required_order does not divide it.
ZeroEstimateCheck zero_estimate_check(const IteratedFamily& fam, const GFunctionSystem& sys, bool parallel = true);

long zero_estimate_ell0(const GFunctionSystem& sys, long q, long h);

// Fraction-free (Bareiss) determinant over Q[z]; the reference kernel.
Poly det_poly_serial(const std::vector<std::vector<Poly>>& M);
// Evaluation at deg+1 integer points in parallel, then Newton interpolation.
Poly det_poly_parallel(const std::vector<std::vector<Poly>>& M);
Rational det_rational(std::vector<std::vector<Rational>> M);

// Smallest k <= K with n Q_k(a/b) - B b^m P_{j,k}(a/b) != 0. Throws InternalError("rank deficiency")
// when none exists and the family reaches N + ell0, PreconditionError when it is shorter.
long find_nonvanishing_index(const IteratedFamily& fam, const GFunctionSystem& sys, const Integer& a,
                             const Integer& b, const Integer& n, const Integer& B, long m, std::size_t j);

} // namespace gpade
