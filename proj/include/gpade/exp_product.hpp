#pragma once

#include <map>
#include <string>

#include "gpade/interval.hpp"

namespace gpade {

// Exact symbolic positive real  coefficient * e^e_exponent * prod_i base_i^(exp_i)
// with rational coefficient, rational exponent of e, and rational bases carrying
// non-integer rational exponents. Growth constants (D = e^2, D = 2*2^(1/1), ...) and
// the derived constants c1 and c6 stay exact in this form; only logs and values are intervals.
class ExpProduct {
public:
    ExpProduct() = default;
    static ExpProduct rational(const Rational& value);
    static ExpProduct exp(const Rational& exponent);

    [[nodiscard]] const Rational& coefficient() const { return coefficient_; }
    [[nodiscard]] const Rational& e_exponent() const { return e_exponent_; }
    [[nodiscard]] const std::map<Rational, Rational>& radicals() const { return radicals_; }
    [[nodiscard]] bool is_rational() const { return e_exponent_ == 0 && radicals_.empty(); }

    [[nodiscard]] ExpProduct pow(const Rational& exponent) const;
    friend ExpProduct operator*(const ExpProduct& a, const ExpProduct& b);
    friend bool operator==(const ExpProduct& a, const ExpProduct& b);

    [[nodiscard]] IntervalReal log(long bits) const;
    [[nodiscard]] IntervalReal value(long bits) const;

    // e.g. "4*e^66", "2^(17/16)*e^(187/3)"
    [[nodiscard]] std::string to_string() const;

private:
    void absorb(const Rational& base, const Rational& exponent);

    Rational coefficient_ = 1;
    Rational e_exponent_ = 0;
    std::map<Rational, Rational> radicals_;
};

} // namespace gpade
