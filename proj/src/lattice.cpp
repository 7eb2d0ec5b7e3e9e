#include "gpade/lattice.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

std::vector<Rational> to_rational(const IntVector& v)
{
    return {v.begin(), v.end()};
}

} // namespace

Integer max_norm(const IntVector& v)
{
    Integer m = 0;
    for (const auto& x : v) {
        if (abs(x) > m) {
            m = abs(x);
        }
    }
    return m;
}

IntVector mat_vec(const IntMatrix& M, const IntVector& v)
{
    IntVector out(M.size());
    for (std::size_t i = 0; i < M.size(); ++i) {
        if (M[i].size() != v.size()) {
            throw PreconditionError("mat_vec: dimension mismatch");
        }
        Integer s = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            s += M[i][k] * v[k];
        }
        out[i] = s;
    }
    return out;
}

bool is_zero_vector(const IntVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector normalize_sign(IntVector v)
{
    for (const auto& x : v) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : v) {
                    y = -y;
                }
            }
            break;
        }
    }
    return v;
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& M, std::size_t cols)
{
    const std::size_t rows = M.size();
    for (const auto& r : M) {
        if (r.size() != cols) {
            throw PreconditionError("integer_kernel_basis: ragged matrix");
        }
    }
    // W = [M^T | I], one row per column of M; row operations stay unimodular.
    std::vector<IntVector> W(cols, IntVector(rows + cols));
    for (std::size_t i = 0; i < cols; ++i) {
        for (std::size_t r = 0; r < rows; ++r) {
            W[i][r] = M[r][i];
        }
        W[i][rows + i] = 1;
    }
    std::size_t pivot = 0;
    for (std::size_t c = 0; c < rows && pivot < cols; ++c) {
        for (;;) {
            // Smallest nonzero entry of column c among the unreduced rows becomes the pivot.
            std::size_t best = cols;
            for (std::size_t i = pivot; i < cols; ++i) {
                if (W[i][c] != 0 && (best == cols || abs(W[i][c]) < abs(W[best][c]))) {
                    best = i;
                }
            }
            if (best == cols) {
                break;
            }
            std::swap(W[pivot], W[best]);
            bool done = true;
            for (std::size_t i = pivot + 1; i < cols; ++i) {
                if (W[i][c] == 0) {
                    continue;
                }
                Integer qt;
                mpz_tdiv_q(qt.get_mpz_t(), W[i][c].get_mpz_t(), W[pivot][c].get_mpz_t());
                for (std::size_t k = c; k < rows + cols; ++k) {
                    W[i][k] -= qt * W[pivot][k];
                }
                if (W[i][c] != 0) {
                    done = false;
                }
            }
            if (done) {
                ++pivot;
                break;
            }
        }
    }
    std::vector<IntVector> basis;
    for (std::size_t i = pivot; i < cols; ++i) {
        basis.emplace_back(W[i].begin() + static_cast<std::ptrdiff_t>(rows), W[i].end());
    }
    return basis;
}

std::vector<IntVector> lll_reduce(std::vector<IntVector> b, const Rational& delta)
{
    const std::size_t n = b.size();
    if (n <= 1) {
        return b;
    }
    std::vector<std::vector<Rational>> bstar(n);
    std::vector<Rational> Bn(n);
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
    auto gram_schmidt = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            bstar[i] = to_rational(b[i]);
            const auto bi = to_rational(b[i]);
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(bi, bstar[j]) / Bn[j];
                for (std::size_t k = 0; k < bstar[i].size(); ++k) {
                    bstar[i][k] -= mu[i][j] * bstar[j][k];
                }
            }
            Bn[i] = dot(bstar[i], bstar[i]);
            if (Bn[i] == 0) {
                throw PreconditionError("lll_reduce: vectors are linearly dependent");
            }
        }
    };
    gram_schmidt();
    std::size_t k = 1;
    while (k < n) {
        for (std::size_t jj = k; jj-- > 0;) {
            const Integer r = floor(mu[k][jj] + Rational(1, 2));
            if (r != 0) {
                for (std::size_t t = 0; t < b[k].size(); ++t) {
                    b[k][t] -= r * b[jj][t];
                }
                for (std::size_t t = 0; t < jj; ++t) {
                    mu[k][t] -= Rational(r) * mu[jj][t];
                }
                mu[k][jj] -= Rational(r);
            }
        }
        if (Bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * Bn[k - 1]) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max<std::size_t>(k - 1, 1);
        }
    }
    return b;
}

} // namespace gpade
