#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpade/constants.hpp"

namespace gpade {

// x = integer_part + 0.a_1 a_2 ... in base b. Digits past certified_len are not stored.
// Terminating expansions end in zeros, never in (b-1) repeated.
struct DigitString {
    Integer base = 10;
    Integer integer_part = 0;
    std::vector<unsigned> digits;  // digits[i] = a_{i+1}
    std::size_t certified_len = 0;

    [[nodiscard]] unsigned digit(std::size_t n) const { return digits.at(n - 1); }  // 1-based
    [[nodiscard]] std::string to_string() const;                                   // digits only
    // floor(b^k x)
    [[nodiscard]] Integer prefix_value(std::size_t k) const;
};

// Digit string of an exact value, for tests and rational inputs.
DigitString digits_of_rational(const Rational& x, const Integer& b, std::size_t count);

// Certified digits: every returned digit is the same for all points of the final enclosure.
// Working precision doubles up to max_bits (0 selects 4x the initial precision); certified_len
// may fall short of count, never exceed it.
DigitString expand_digits(const Producer& value, const Integer& b, std::size_t count, long max_bits = 0);

// Largest l with (a_n ... a_{n+t-1})^l a prefix of a_n a_{n+1} ...; l >= 1.
// Throws PreconditionError("extend expansion") when the certified digits end before the first mismatch.
long repetition_count(const DigitString& ds, std::size_t t, std::size_t n);

struct Theorem2Convergent {
    Integer p;                  // (b^t-1) floor(b^(n-1) xi) + a_n b^(t-1) + ... + a_{n+t-1}
    Integer q;                  // b^(n-1) (b^t - 1)
    long repetitions = 0;       // N_b(xi, t, n)
    Rational bound;             // (b-1) / b^(n + t N)
    bool bound_ok = false;      // |xi - p/q| <= bound, certified
    // |xi - p/q| <= b^-(n + tN - 1), which is all that agreement on n+tN-1 digits gives.
    bool digit_match_ok = false;
};

// Throws InternalError when even the digit-match bound fails.
Theorem2Convergent theorem2_convergent(const DigitString& ds, const Producer& xi, std::size_t t, std::size_t n);

struct RepetitionProfile {
    std::size_t t = 0;
    std::vector<long> values;   // N_b(xi, t, n) for n = 1..window
    Rational max_ratio;         // max N/n
    std::size_t argmax = 0;
    // Descriptive only: max over m of log(1/|xi - n_m/b^m|)/(m log b) - 1 with n_m nearest.
    double empirical_vb = 0;
};

RepetitionProfile repetition_profile(const DigitString& ds, const Producer& xi, std::size_t t, std::size_t window);

struct Theorem2Report {
    std::string system;
    Integer a;
    Integer b;
    long s = 0;
    std::size_t t = 0;
    Rational eps;
    std::size_t window = 0;
    DigitString digits;
    RepetitionProfile profile;
    bool empirical_ok = false;        // max N/n <= eps/t on the window
    Tri threshold_chi = Tri::unknown; // b^s > (c1 |a|)^c2
    Tri threshold_eps = Tri::unknown; // b^s >= (|a|+1)^(2 c4/eps)
};

Theorem2Report theorem2_bound_check(const GFunctionSystem& sys, const Integer& a, const Integer& b, long s,
                                    std::size_t t, const Rational& eps, std::size_t window, long bits = 448);

} // namespace gpade
