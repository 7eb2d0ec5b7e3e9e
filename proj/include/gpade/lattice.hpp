#pragma once

#include <cstddef>
#include <vector>

#include "gpade/exact.hpp"

namespace gpade {

using IntVector = std::vector<Integer>;
// Row-major; every row has the same length.
using IntMatrix = std::vector<IntVector>;

// Basis of the integer lattice {v in Z^cols : M v = 0}, via unimodular row reduction of [M^T | I].
// `cols` is needed because M may have no rows.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& M, std::size_t cols);

// LLL reduction with exact rational Gram-Schmidt data; input vectors must be linearly independent.
std::vector<IntVector> lll_reduce(std::vector<IntVector> basis, const Rational& delta = Rational(99, 100));

Integer max_norm(const IntVector& v);
IntVector mat_vec(const IntMatrix& M, const IntVector& v);
bool is_zero_vector(const IntVector& v);

// Sign-normalized so the first nonzero entry is positive.
IntVector normalize_sign(IntVector v);

} // namespace gpade
