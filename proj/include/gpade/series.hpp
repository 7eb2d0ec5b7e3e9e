#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gpade/poly.hpp"

namespace gpade {

// Power series known modulo z^order. Coefficients at or beyond `order` are unknown, not zero.
class SeriesTrunc {
public:
    SeriesTrunc() = default;
    SeriesTrunc(std::vector<Rational> coeffs, std::size_t order);

    // First `order` coefficients of a coefficient oracle.
    static SeriesTrunc from_oracle(const std::function<Rational(std::size_t)>& coeff, std::size_t order);
    static SeriesTrunc from_poly(const Poly& p, std::size_t order);

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }

    // Index of the first nonzero known coefficient; nullopt when all known coefficients vanish.
    [[nodiscard]] std::optional<std::size_t> valuation() const;

    [[nodiscard]] SeriesTrunc derivative() const;

    friend SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b);
    friend SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b);
    friend SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b);
    friend SeriesTrunc operator*(const Poly& p, const SeriesTrunc& s);

private:
    std::vector<Rational> coeffs_;
    std::size_t order_ = 0;
};

} // namespace gpade
