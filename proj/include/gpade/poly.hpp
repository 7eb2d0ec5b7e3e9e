#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpade/exact.hpp"

namespace gpade {

// Dense univariate polynomial over Q. Coefficient k multiplies z^k; trailing zeros are always trimmed.
// The zero polynomial has no coefficients and no degree: degree() returns nullopt, never -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t k);
    static Poly from_integers(const std::vector<long>& coeffs);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::optional<std::size_t> degree() const;
    // Order of vanishing at z = 0; nullopt for the zero polynomial.
    [[nodiscard]] std::optional<std::size_t> valuation() const;

    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
    [[nodiscard]] Rational coefficient(std::size_t k) const;

    [[nodiscard]] Rational operator()(const Rational& z) const;
    [[nodiscard]] Poly derivative() const;
    // z^k * this
    [[nodiscard]] Poly shifted_up(std::size_t k) const;
    // this / z^k; requires valuation >= k.
    [[nodiscard]] Poly shifted_down(std::size_t k) const;
    // P(-z)
    [[nodiscard]] Poly reflected() const;

    [[nodiscard]] bool has_integer_coefficients() const;
    // lcm of the coefficient denominators (1 for the zero polynomial).
    [[nodiscard]] Integer denominator_lcm() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Rational& c);
    Poly& operator*=(const Poly& other);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    // "[c0,c1,...]" with exact rational entries.
    [[nodiscard]] std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

// Maximum modulus of the coefficients; 0 for the zero polynomial.
Rational poly_height(const Poly& p);

// min(1 + deg A, 1 + deg B) * H(A) * H(B), an upper bound for H(A*B). Zero inputs are rejected.
Rational product_height_bound(const Poly& a, const Poly& b);

// Schoolbook product; the reference kernel.
Poly mul_serial(const Poly& a, const Poly& b);
// Same product with output coefficients distributed over OpenMP threads.
Poly mul_parallel(const Poly& a, const Poly& b);

// Euclidean division over Q; b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// a / b when the division is exact; throws InternalError otherwise.
Poly exact_div(const Poly& a, const Poly& b);

} // namespace gpade
