#pragma once

#include <optional>
#include <string>

#include "gpade/derivation.hpp"
#include "gpade/exp_product.hpp"

namespace gpade {

// The zero-estimate constant h0 and the two later thresholds h1, h2 are effective but never
// instantiated numerically; these defaults only feed c5 and are reported as unverified.
struct EffectiveConfig {
    Rational h0 = 1;
    Rational h1 = 1;
    Rational h2 = 1;
};

struct ConstantsReport {
    // inputs
    std::string system;
    Integer a;
    Integer b;
    Rational t;
    long m = 0;
    EffectiveConfig config;
    long bits = 0;

    ExpProduct chi_exact;   // chi = c1 = 4 H(D) (C D)^(8Nd+1) C
    IntervalReal chi;
    IntervalReal c1;
    long c2 = 0;            // 3(N+2)
    Rational c5;            // max(h0, h1, h2, 8N^2 d^3, 4t)
    Rational c3;            // c5 / 3
    ExpProduct c6_exact;
    IntervalReal c6;
    IntervalReal c7;
    IntervalReal c8;
    IntervalReal c4;
    Rational y;             // 1 / (4(d+1))
    IntervalReal x;         // log b / (3 log(chi |a|))

    // b > (c1 |a|)^c2
    Tri hypothesis3 = Tri::unknown;
    // h, p, q, beta exist once x > N+1 is certified and the floors are unambiguous.
    std::optional<long> h;
    std::optional<long> p;
    std::optional<long> q;
    std::optional<IntervalReal> beta;
    Tri eqhyp = Tri::unknown;

    // Closed form of c4 for the dilogarithm, when applicable, and whether the recomputed
    // chain differs from it by more than 1%.
    std::optional<IntervalReal> c4_reference;
    bool c4_discrepancy = false;
};

// 2^(2q+(d-1)k+1) H(D)^k (q (C Dgrowth)^(p+h+1))^(Nh/(q+1-Nh)), rounded up to a rational.
// Throws PreconditionError when the growth constants are not verified up to p+h.
Rational bound_height_Qk(const PadeApproximant& approx, const GFunctionSystem& sys, long k, long bits = 256);

// H(Q_k) (q'+1) max(1,C)^q' (C|z|)^(p+h+1-k) / (1 - C|z|) with q' = q+k(d-1) and H(Q_k) exact.
// max(1,C) is raised to max(q', 1) so that |f_{j,n}| <= C^(n+1) is covered when q' = 0.
Rational bound_remainder(const IteratedFamily& fam, const GFunctionSystem& sys, long k, const Rational& z);

// Certified enclosure producer for R_{j,k}(z) = Q_k(z) F_j(z) - P_{j,k}(z), summed from its own series.
Producer remainder_producer(const IteratedFamily& fam, const GFunctionSystem& sys, std::size_t j, long k,
                            const Rational& z);

// With strict set, a failed hypothesis b > (c1|a|)^c2 throws HypothesisError("hypothesis (3) fails");
// otherwise it is reported and h, p, q stay empty.
ConstantsReport compute_constants(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Rational& t,
                                  long m, const EffectiveConfig& config = {}, long bits = 448, bool strict = false,
                                  long max_bits = 4096);

// Left side of the parameter condition, evaluated in log space, compared against 1/2.
// Without h the factor beta >= 1 is dropped, so only a negative verdict can be certified.
Tri check_eqhyp(const ConstantsReport& report, const GFunctionSystem& sys, const Integer& a, const Integer& b,
                long bits = 448);

// 1201779/48 + 1185019/(3 log 2) + 396 log 2
IntervalReal reference_c4_dilog(long bits);

} // namespace gpade
