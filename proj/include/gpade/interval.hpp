#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "gpade/exact.hpp"

namespace gpade {

// Working precision in bits for a requested number of decimal digits.
long digits_to_bits(long digits);

// Closed interval [lo, hi] with exact rational endpoints. Every producer in the library
// guarantees the true value lies inside; nothing here ever touches floating point.
class IntervalReal {
public:
    IntervalReal() = default;
    IntervalReal(const Rational& point) : lo_(point), hi_(point) {} // NOLINT(google-explicit-constructor)
    IntervalReal(const Rational& lo, const Rational& hi);

    [[nodiscard]] const Rational& lo() const { return lo_; }
    [[nodiscard]] const Rational& hi() const { return hi_; }
    [[nodiscard]] Rational width() const { return hi_ - lo_; }
    [[nodiscard]] Rational midpoint() const { return (lo_ + hi_) / 2; }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }

    [[nodiscard]] bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const IntervalReal& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    [[nodiscard]] bool intersects(const IntervalReal& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    [[nodiscard]] bool positive() const { return lo_ > 0; }
    [[nodiscard]] bool negative() const { return hi_ < 0; }

    // Outward rounding of both endpoints to `bits` significant bits.
    [[nodiscard]] IntervalReal rounded(long bits) const;

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b);
    // Divisor must exclude zero.
    friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b);
    friend IntervalReal operator-(const IntervalReal& a);
    friend bool operator==(const IntervalReal& a, const IntervalReal& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

    // "[lo, hi]" in scientific notation, each endpoint rounded outward.
    [[nodiscard]] std::string to_string(int sig = 25) const;
    // "[lo, hi]" with exact rational endpoints.
    [[nodiscard]] std::string to_exact_string() const;

private:
    Rational lo_;
    Rational hi_;
};

IntervalReal abs(const IntervalReal& x);
IntervalReal hull(const IntervalReal& a, const IntervalReal& b);

// a.hi < b.lo, resp. a.hi <= b.lo
bool certainly_less(const IntervalReal& a, const IntervalReal& b);
bool certainly_le(const IntervalReal& a, const IntervalReal& b);

enum class Tri { yes, no, unknown };
// Compares an enclosure against an exact threshold: yes if x < t certainly, no if x >= t certainly.
Tri less_than(const IntervalReal& x, const Rational& t);

// floor(x) when both endpoints share it.
std::optional<Integer> common_floor(const IntervalReal& x);

// Directed rounding of a rational to `bits` significant bits.
Rational round_down(const Rational& x, long bits);
Rational round_up(const Rational& x, long bits);

IntervalReal exp_interval(const Rational& x, long bits);
IntervalReal exp_interval(const IntervalReal& x, long bits);
// Natural logarithm; argument must be positive.
IntervalReal log_interval(const Rational& x, long bits);
IntervalReal log_interval(const IntervalReal& x, long bits);
IntervalReal log2_interval(long bits);
IntervalReal sqrt_interval(const Rational& x, long bits);
// base^exponent for a positive base.
IntervalReal pow_interval(const IntervalReal& base, const IntervalReal& exponent, long bits);

// A certified real: returns an enclosure of width at most the requested width.
using Producer = std::function<IntervalReal(const Rational& width)>;

// Runs a producer and checks its contract (width bound).
IntervalReal interval_refine(const Producer& producer, const Rational& width);

Producer constant_producer(const Rational& value);

// Sum of c_n z^n given |c_n| <= scale * growth^(n+1) for n >= min_terms.
// Throws PreconditionError("no convergent tail bound") when growth*|z| >= 1.
Producer series_producer(std::function<Rational(std::size_t)> coeff, const Rational& z, const Rational& scale,
                         const Rational& growth, std::size_t min_terms = 0);

} // namespace gpade
