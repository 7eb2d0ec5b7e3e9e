#pragma once

#include <cstddef>
#include <vector>

#include "gpade/constants.hpp"

namespace gpade {

// alpha/beta a convergent of sqrt(d), d = u/v; pell_value = v alpha^2 - u beta^2.
struct QuadConvergent {
    Integer alpha;
    Integer beta;
    Integer pell_value;
};

struct SqrtExpansion {
    Rational d;
    Integer u;
    Integer v;
    // sqrt(d) = [a0; preperiod..., (period)...]
    Integer a0;
    std::vector<Integer> preperiod;
    std::vector<Integer> period;
    std::vector<QuadConvergent> convergents;

    // k-th partial quotient, k >= 0.
    [[nodiscard]] Integer partial_quotient(std::size_t k) const;
};

// Surd algorithm on (P + sqrt(uv)) / Q starting from P = 0, Q = v; the period is found when a (P, Q)
// state repeats. Throws PreconditionError("sqrt(d) rational") for squares of rationals.
SqrtExpansion cf_sqrt(const Rational& d, std::size_t count);

// Convergents with beta <= max_beta.
std::vector<QuadConvergent> convergents_up_to(const SqrtExpansion& e, const Integer& max_beta);

struct PellCheck {
    Rational pell;           // alpha^2 - d beta^2
    bool exact_ok = false;   // |pell| <= 2 sqrt(d) + 1, decided exactly by squaring
    IntervalReal bound;      // enclosure of 2 sqrt(d) + 1
    bool interval_ok = false;
};

PellCheck pell_bound_check(const QuadConvergent& c, const Rational& d, long bits = 128);

struct Reduction {
    Integer a;               // v alpha^2 - u beta^2
    Integer b;               // v alpha^2
    // Enclosures of f(a/b) alpha/beta with f(x) = sqrt(1-x), and of sqrt(d).
    IntervalReal lhs;
    IntervalReal sqrt_d;
    bool via_series = false; // f evaluated from the (1-z)^(1/2) series rather than the closed form
    bool identity_ok = false;
    Tri hypothesis = Tri::unknown;     // b > (c1 |a|)^c2 for the (1-z)^(1/2) system
    IntervalReal log_Nd;               // log of (c1 c(d))^(c2/2), c(d) = 2 sqrt(d) + 1
    Tri alpha_above_Nd = Tri::unknown;
};

// Throws InternalError when a = 0.
Reduction reduce_to_theorem1(const QuadConvergent& c, const Rational& d, long bits = 256);

enum class Denominator { alpha, beta };

struct ScanRow {
    long m = 0;
    Integer n;                 // nearest to sqrt(d) den^m, ties to even
    IntervalReal distance;     // |sqrt(d) - n/den^m|
    double exponent = 0;       // -log(distance) / (m log den), descriptive
    double eta = 0;            // distance^(-1/m) / den, descriptive
};

struct ScanReport {
    Rational d;
    Integer den;
    std::vector<ScanRow> rows;
    double fitted_constant = 0; // max eta over the scanned m, not certified
};

ScanReport theorem5_scan(const Rational& d, const QuadConvergent& c, long m_lo, long m_hi, Denominator which,
                         long bits = 128);

} // namespace gpade
