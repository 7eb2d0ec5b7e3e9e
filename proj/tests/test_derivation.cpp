#include <doctest.h>

#include "gpade/derivation.hpp"
#include "gpade/error.hpp"
#include "support.hpp"

using namespace gpade;
using gpade::testing::random_poly;
using gpade::testing::uniform;

TEST_CASE("iteration of the logarithm approximant")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const PadeApproximant A = build_pade(lg, 1, 1, 1);
    const IteratedFamily fam = iterate(A, lg, 1);
    CHECK(fam.Qk[0] == A.Q);
    CHECK(fam.Pk[0][0] == A.P[0]);
    CHECK(fam.Qk[1] == Poly::from_integers({-1, 1}));
    CHECK(fam.Pk[1][0] == Poly::from_integers({0, 1}));
    CHECK(fam.order_certs[1][0] == 2);
    CHECK(fam.order_ok[1]);
}

TEST_CASE("closed form of Q_k")
{
    CHECK(q_closed_form(Poly::from_integers({0, 0, 1}), Poly::from_integers({0, 1, -1}), 1) ==
          Poly::from_integers({0, 0, 2, -2}));
    CHECK(q_closed_form(Poly::from_integers({5, 1}), Poly::from_integers({1, -1}), 0) == Poly::from_integers({5, 1}));
}

TEST_CASE("zero estimate for the logarithm")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const IteratedFamily fam = iterate(build_pade(lg, 1, 1, 1), lg, 1);
    const ZeroEstimateCheck ze = zero_estimate_check(fam, lg);
    CHECK(ze.Delta == Poly::from_integers({0, 0, 1}));
    CHECK(ze.required_order == 2);
    CHECK(ze.vanish_order == 2);
    CHECK(ze.DeltaTilde == Poly::constant(1));
    CHECK(ze.nonzero);
    CHECK(ze.degree_ok);
    CHECK(zero_estimate_ell0(lg, 1, 1) == 0);

    // K below N: the determinant needs columns k = 0..N.
    const GFunctionSystem li2 = resolve_system("polylog2");
    CHECK_THROWS_AS(zero_estimate_check(iterate(build_pade(li2, 4, 4, 2), li2, 1), li2), PreconditionError);
}

TEST_CASE("zero estimate for the dilogarithm, p = q = 4, h = 2")
{
    GFunctionSystem li2 = resolve_system("polylog2");
    verify_growth(li2, 20);
    const IteratedFamily fam = iterate(build_pade(li2, 4, 4, 2), li2, 2);
    const ZeroEstimateCheck ze = zero_estimate_check(fam, li2);
    CHECK(ze.nonzero);
    CHECK(ze.required_order == 2 * 7 - 3);
    CHECK(ze.vanish_order >= ze.required_order);
    CHECK(ze.degree_ok);
    CHECK(ze.Delta == zero_estimate_check(fam, li2, false).Delta);
}

TEST_CASE("property: serial and parallel determinants agree")
{
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(1, 4));
        std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
        for (auto& row : M) {
            for (auto& e : row) {
                e = random_poly(4, 9);
            }
        }
        const Poly s = det_poly_serial(M);
        CHECK(s == det_poly_parallel(M));
        // Evaluation commutes with the determinant.
        Rational z(uniform(-5, 5), static_cast<unsigned long>(uniform(1, 4)));
        z.canonicalize();
        std::vector<std::vector<Rational>> E(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                E[i][j] = M[i][j](z);
            }
        }
        CHECK(s(z) == det_rational(E));
    }
}

TEST_CASE("property: iteration certificates over a parameter sweep")
{
    for (const char* name : {"log1m", "polylog2", "binom:1/2"}) {
        GFunctionSystem sys = resolve_system(name);
        verify_growth(sys, 30);
        const auto N = static_cast<long>(sys.N());
        for (long p = 2; p <= 8; ++p) {
            for (long h = 1; N * h <= p; ++h) {
                const long q = N * h;
                const PadeApproximant A = build_pade(sys, p, q, h);
                const long K = std::max(N, h / sys.d());
                const IteratedFamily fam = iterate(A, sys, K);
                CAPTURE(name);
                CAPTURE(p);
                CAPTURE(h);
                for (long k = 0; k <= K; ++k) {
                    const auto ku = static_cast<std::size_t>(k);
                    CHECK(fam.degree_ok[ku]);
                    CHECK(fam.Qk[ku].has_integer_coefficients());
                    CHECK(q_closed_form(A.Q, sys.D_poly(), k) == fam.Qk[ku]);
                    if (h >= k * sys.d()) {
                        CHECK(fam.order_ok[ku]);
                        CHECK(fam.integrality_ok[ku]);
                    }
                }
                const ZeroEstimateCheck ze = zero_estimate_check(fam, sys);
                CHECK(ze.nonzero);
                CHECK(ze.vanish_order >= ze.required_order);
                CHECK(ze.degree_ok);
            }
        }
    }
}

TEST_CASE("nonvanishing index")
{
    const GFunctionSystem lg = resolve_system("log1m");
    const IteratedFamily fam = iterate(build_pade(lg, 1, 1, 1), lg, 1);
    // At z = 1/2: Q_0 = 3/2, P_0 = -1, so n/(B b^m) = -2/3 collides at k = 0.
    CHECK(find_nonvanishing_index(fam, lg, 1, 2, Integer(1), Integer(1), 1, 1) == 0);
    CHECK(find_nonvanishing_index(fam, lg, 1, 2, Integer(-4), Integer(3), 1, 1) == 1);
    // z = 1 is the root of D(z) = 1 - z.
    CHECK_THROWS_AS(find_nonvanishing_index(fam, lg, 2, 2, Integer(1), Integer(1), 1, 1), PreconditionError);
}
