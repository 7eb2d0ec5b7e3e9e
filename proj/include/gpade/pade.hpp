#pragma once

#include <vector>

#include "gpade/gfun.hpp"
#include "gpade/interval.hpp"
#include "gpade/lattice.hpp"

namespace gpade {

// Type II approximant [q; p,...,p; p+h+1]: ord_0(Q F_j - P_j) >= p+h+1 for every j.
struct PadeApproximant {
    long p = 0;
    long q = 0;
    long h = 0;
    IntVector v;           // coefficients of Q
    Poly Q;
    std::vector<Poly> P;   // P[j-1] approximates F_j
    // Verified lower bound on ord_0(Q F_j - P_j), per j.
    std::vector<long> order_certificates;
    bool integrality_ok = false;  // d_p P_j in Z[z] for all j
    Rational height_Q;
    // 1 + (q (C Dgrowth)^(p+h+1))^(Nh/(q+1-Nh)), enclosed.
    IntervalReal siegel_bound;
    // max|v_k| <= siegel_bound, certified against the lower endpoint.
    bool siegel_ok = false;
    std::size_t kernel_dim = 0;
};

// (N h) x (q+1) matrix with row (j, n) = d_{p+h} f_{j,n-k}, k = 0..q, n = p+1..p+h.
IntMatrix constraint_matrix(const GFunctionSystem& sys, long p, long q, long h);

struct KernelVector {
    IntVector v;
    std::size_t kernel_dim = 0;
};

// Nonzero integer kernel vector of minimal max-norm among the LLL-reduced basis and its
// pairwise sums and differences, sign-normalized to a positive leading entry. Ties go to the
// earliest leading nonzero position, then to the smallest support, then to the lexicographically smallest vector.
KernelVector small_kernel_vector(const IntMatrix& M, std::size_t cols);

IntervalReal siegel_bound(const GFunctionSystem& sys, long p, long q, long h, long bits = 256);

// Throws InternalError("kernel vector invalid") when the order certificate fails.
PadeApproximant assemble(const GFunctionSystem& sys, long p, long q, long h, const IntVector& v);

// constraint_matrix -> small_kernel_vector -> assemble, plus the Siegel flag.
PadeApproximant build_pade(const GFunctionSystem& sys, long p, long q, long h, long bits = 256);

// p >= q >= N h >= 0 and q + 1 > N h.
bool pade_parameters_valid(std::size_t N, long p, long q, long h);

} // namespace gpade
