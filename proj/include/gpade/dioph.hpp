#pragma once

#include <optional>
#include <string>

#include "gpade/constants.hpp"

namespace gpade {

// Enclosure of F_j(z) of width <= width, from partial sums and the tail bound |f_{j,n}| <= C^(n+1).
// Throws PreconditionError("no convergent tail bound") when C|z| >= 1.
IntervalReal eval_certified(const GFunctionSystem& sys, std::size_t j, const Rational& z, const Rational& width);
// `sys` must outlive the producer.
Producer value_producer(const GFunctionSystem& sys, std::size_t j, const Rational& z);

// Nearest integer to a certified real, ties to the even neighbour; nullopt when the enclosure is too wide.
std::optional<Integer> nearest_integer(const IntervalReal& x);

struct XiWitness {
    long k = 0;
    Integer U;      // P_{j,k}(a/b) = U / (d_e b^e), e = p+(d-1)k
    Integer V;      // Q_k(a/b) = V / b^(q+(d-1)k)
    Integer xi;     // n d_e b^(p-q) V - B b^m U
    Integer xi_direct;  // d_e b^e (n Q_k(a/b) - B b^m P_{j,k}(a/b)), by rational arithmetic
    bool divisible_by_bm = false;
};

// k is located by find_nonvanishing_index. Throws PreconditionError when p < q+m.
XiWitness construct_xi(const IteratedFamily& fam, const GFunctionSystem& sys, const Integer& a, const Integer& b,
                       const Integer& B, long m, const Integer& n, std::size_t j);

// Replay of the inequality chain at one (p, q, h, k).
struct ChainReplay {
    long p = 0;
    long q = 0;
    long h = 0;
    XiWitness xi;
    Rational Qk_value;          // Q_k(a/b)
    IntervalReal R_abs;         // |R_{j,k}(a/b)|
    // (1/2) d_e^-1 b^-e B^-1
    Rational r_threshold;
    bool remainder_small = false;
    // |Q_k(a/b)| |n - B b^m F_j(a/b)| from the enclosure of F_j, and d_e^-1 b^(m-e) - B b^m |R_{j,k}(a/b)|.
    IntervalReal gap_lhs;
    IntervalReal gap_rhs;
    // Enclosures of both sides of Q_k (n - B b^m F_j) = xi / (d_e b^e) - B b^m R_{j,k} intersect.
    bool identity_ok = false;
    // identity_ok, |xi| >= b^m and gap_rhs > 0: the gap inequality then follows from the triangle
    // inequality. A direct interval comparison cannot certify it since equality occurs when |xi| = b^m.
    bool gap_ok = false;
    // d_e^-1 b^-e / (2 B |Q_k(a/b)|)
    Rational lower_bound;
    bool lower_bound_ok = false;

    [[nodiscard]] bool ok() const
    {
        return xi.divisible_by_bm && xi.xi != 0 && remainder_small && gap_ok && lower_bound_ok;
    }
};

struct VerifyOptions {
    std::size_t j = 1;
    // B <= b^t; defaults to the least integer t with that property.
    std::optional<Rational> t;
    // Skip the hypothesis b > (c1|a|)^c2 and replay the proof chain at feasible sizes.
    bool property_mode = false;
    EffectiveConfig config;
    long bits = 448;
    long max_bits = 8192;
    // Fixed chain parameters; otherwise searched with q = N h, p = q+m..q+m+p_slack, h = 1..max_h.
    std::optional<long> p;
    std::optional<long> q;
    std::optional<long> h;
    long max_h = 12;
    long p_slack = 6;
    // Also check the corollary form 1/b^(m(1+eps)).
    std::optional<Rational> epsilon;
};

struct VerifyReport {
    std::string system;
    Integer a;
    Integer b;
    Integer B;
    Integer n;
    long m = 0;
    std::size_t j = 1;
    Rational t;
    bool property_mode = false;
    bool reflected = false;

    IntervalReal value;       // F_j(a/b)
    IntervalReal lhs;         // |F_j(a/b) - n/(B b^m)|
    ConstantsReport constants;
    // log of 1/(B b^m (|a|+1)^(c4 m)); the bound itself is far below any printable scale.
    IntervalReal log_rhs;
    Tri hypotheses = Tri::unknown;   // b > (c1|a|)^c2, B <= b^t, m >= c3 log b / log(|a|+1)
    Tri holds = Tri::unknown;
    std::string reason;
    std::optional<ChainReplay> chain;

    std::optional<Rational> epsilon;
    Tri corollary_hypotheses = Tri::unknown;  // m >= 2t/eps, b > (|a|+1)^(2 c4/eps)
    Tri corollary_holds = Tri::unknown;       // lhs >= b^(-m(1+eps))
};

// Without property_mode an unmet hypothesis throws HypothesisError.
VerifyReport verify_theorem1(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Integer& B, long m,
                             const Integer& n, const VerifyOptions& options = {});

// n = nearest integer to B b^m F_j(a/b), ties to even.
Integer nearest_numerator(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Integer& B, long m,
                          std::size_t j, long bits = 448, long max_bits = 8192);

// Replays the chain at explicit parameters (a > 0 expected; reflect first otherwise).
ChainReplay replay_chain(const GFunctionSystem& sys, const Integer& a, const Integer& b, const Integer& B, long m,
                         const Integer& n, std::size_t j, long p, long q, long h, long bits = 448);

} // namespace gpade
