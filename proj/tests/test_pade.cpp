#include <doctest.h>

#include "gpade/error.hpp"
#include "gpade/pade.hpp"
#include "support.hpp"

using namespace gpade;
using gpade::testing::uniform;

namespace {

IntVector ints(std::initializer_list<long> xs)
{
    IntVector v;
    for (const long x : xs) {
        v.emplace_back(x);
    }
    return v;
}

} // namespace

TEST_CASE("constraint matrices")
{
    const GFunctionSystem lg = resolve_system("log1m");
    // f_{1,n} = -1/n with d_2 = 2
    const IntMatrix M1 = constraint_matrix(lg, 1, 1, 1);
    REQUIRE(M1.size() == 1);
    CHECK(M1[0] == ints({-1, -2}));

    const GFunctionSystem li2 = resolve_system("polylog2");
    const IntMatrix M2 = constraint_matrix(li2, 2, 2, 1);
    REQUIRE(M2.size() == 2);
    CHECK(M2[0] == ints({12, 18, 36}));
    CHECK(M2[1] == ints({4, 9, 36}));

    CHECK(constraint_matrix(li2, 3, 2, 0).empty());
}

TEST_CASE("small kernel vectors")
{
    CHECK(small_kernel_vector({ints({1, 2})}, 2).v == ints({2, -1}));
    const KernelVector k = small_kernel_vector({ints({12, 18, 36}), ints({4, 9, 36})}, 3);
    CHECK(k.v == ints({9, -8, 1}));
    CHECK(k.kernel_dim == 1);
    CHECK(small_kernel_vector({}, 2).v == ints({1, 0}));
}

TEST_CASE("property: kernel bases annihilate and LLL keeps the lattice")
{
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(uniform(1, 4));
        const auto cols = rows + static_cast<std::size_t>(uniform(1, 4));
        IntMatrix M(rows, IntVector(cols));
        for (auto& row : M) {
            for (auto& x : row) {
                x = uniform(-30, 30);
            }
        }
        const auto basis = integer_kernel_basis(M, cols);
        CHECK(basis.size() >= cols - rows);
        for (const auto& v : basis) {
            CHECK_FALSE(is_zero_vector(v));
            CHECK(is_zero_vector(mat_vec(M, v)));
        }
        const auto reduced = lll_reduce(basis);
        CHECK(reduced.size() == basis.size());
        for (const auto& v : reduced) {
            CHECK(is_zero_vector(mat_vec(M, v)));
        }
        const KernelVector k = small_kernel_vector(M, cols);
        CHECK(is_zero_vector(mat_vec(M, k.v)));
        CHECK_FALSE(is_zero_vector(k.v));
        CHECK(k.v == normalize_sign(k.v));
        for (const auto& v : reduced) {
            CHECK(max_norm(k.v) <= max_norm(v));
        }
    }
}

TEST_CASE("assembled approximants")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const PadeApproximant A = build_pade(lg, 1, 1, 1);
    CHECK(A.Q == Poly::from_integers({2, -1}));
    CHECK(A.P[0] == Poly::from_integers({0, -2}));
    CHECK(A.order_certificates == std::vector<long>{3});
    CHECK(A.integrality_ok);
    CHECK(A.siegel_ok);

    const GFunctionSystem li2 = resolve_system("polylog2");
    const PadeApproximant B = build_pade(li2, 2, 2, 1);
    CHECK(B.Q == Poly::from_integers({9, -8, 1}));
    CHECK(B.order_certificates == std::vector<long>{4, 4});

    // h = 0: Q = 1 and P_j is the degree-p truncation of F_j.
    const PadeApproximant T = assemble(li2, 3, 2, 0, ints({1, 0, 0}));
    CHECK(T.Q == Poly::constant(1));
    CHECK(T.P[1] == Poly({Rational(0), Rational(1), Rational(1, 4), Rational(1, 9)}));

    CHECK_THROWS_AS(assemble(lg, 1, 1, 1, ints({1, 1})), InternalError);
    CHECK_THROWS_AS(build_pade(lg, 1, 2, 1), PreconditionError);
}

TEST_CASE("approximant denominators against an independent nullspace computation")
{
    // Kernel of dimension one (q = N h), computed with a computer-algebra nullspace and normalized.
    const GFunctionSystem li2 = resolve_system("polylog2");
    const GFunctionSystem lg = resolve_system("log1m");
    CHECK(build_pade(li2, 4, 2, 1).Q == Poly::from_integers({25, -32, 9}));
    CHECK(build_pade(li2, 5, 4, 2).Q == Poly::from_integers({147, -300, 200, -48, 3}));
    CHECK(build_pade(lg, 3, 2, 2).Q == Poly::from_integers({10, -12, 3}));
    CHECK(build_pade(lg, 5, 3, 3).Q == Poly::from_integers({56, -105, 60, -10}));
}

TEST_CASE("property: scaling the kernel vector scales the approximant")
{
    GFunctionSystem li2 = resolve_system("polylog2");
    verify_growth(li2, 30);
    for (long p = 2; p <= 7; ++p) {
        for (long h = 1; 2 * h <= p; ++h) {
            const long q = std::min(p, 2 * h + 1);
            const PadeApproximant A = build_pade(li2, p, q, h);
            IntVector scaled = A.v;
            for (auto& x : scaled) {
                x *= -3;
            }
            const PadeApproximant S = assemble(li2, p, q, h, scaled);
            CHECK(S.Q == A.Q * Rational(-3));
            for (std::size_t j = 0; j < A.P.size(); ++j) {
                CHECK(S.P[j] == A.P[j] * Rational(-3));
            }
            CHECK(S.order_certificates == A.order_certificates);
            // H(Q) <= 2 (q (C D)^(p+h+1))^(Nh/(q+1-Nh)) when the Siegel flag holds.
            CHECK(A.siegel_ok);
            CHECK(Rational(max_norm(A.v)) <= A.siegel_bound.hi());
        }
    }
}

TEST_CASE("parameter validity")
{
    CHECK(pade_parameters_valid(2, 4, 2, 1));
    CHECK_FALSE(pade_parameters_valid(2, 4, 1, 1));
    CHECK_FALSE(pade_parameters_valid(1, 1, 2, 1));
    CHECK(pade_parameters_valid(1, 3, 0, 0));
}
