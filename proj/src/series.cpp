#include "gpade/series.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

SeriesTrunc::SeriesTrunc(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)), order_(order)
{
    coeffs_.resize(order_);
}

SeriesTrunc SeriesTrunc::from_oracle(const std::function<Rational(std::size_t)>& coeff, std::size_t order)
{
    std::vector<Rational> v(order);
    for (std::size_t n = 0; n < order; ++n) {
        v[n] = coeff(n);
    }
    return {std::move(v), order};
}

SeriesTrunc SeriesTrunc::from_poly(const Poly& p, std::size_t order)
{
    std::vector<Rational> v(order);
    for (std::size_t n = 0; n < order; ++n) {
        v[n] = p.coefficient(n);
    }
    return {std::move(v), order};
}

std::optional<std::size_t> SeriesTrunc::valuation() const
{
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (coeffs_[n] != 0) {
            return n;
        }
    }
    return std::nullopt;
}

SeriesTrunc SeriesTrunc::derivative() const
{
    if (order_ == 0) {
        return {};
    }
    std::vector<Rational> v(order_ - 1);
    for (std::size_t n = 1; n < order_; ++n) {
        v[n - 1] = coeffs_[n] * static_cast<unsigned long>(n);
    }
    return {std::move(v), order_ - 1};
}

SeriesTrunc operator+(const SeriesTrunc& a, const SeriesTrunc& b)
{
    const std::size_t m = std::min(a.order_, b.order_);
    std::vector<Rational> v(m);
    for (std::size_t n = 0; n < m; ++n) {
        v[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return {std::move(v), m};
}

SeriesTrunc operator-(const SeriesTrunc& a, const SeriesTrunc& b)
{
    const std::size_t m = std::min(a.order_, b.order_);
    std::vector<Rational> v(m);
    for (std::size_t n = 0; n < m; ++n) {
        v[n] = a.coeffs_[n] - b.coeffs_[n];
    }
    return {std::move(v), m};
}

SeriesTrunc operator*(const SeriesTrunc& a, const SeriesTrunc& b)
{
    // A series known mod z^M times one with valuation v is known mod z^(M+v).
    const auto va = a.valuation();
    const auto vb = b.valuation();
    std::size_t m = std::min(a.order_ + vb.value_or(b.order_), b.order_ + va.value_or(a.order_));
    std::vector<Rational> v(m);
    for (std::size_t i = 0; i < std::min(m, a.order_); ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < m && j < b.order_; ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return {std::move(v), m};
}

SeriesTrunc operator*(const Poly& p, const SeriesTrunc& s)
{
    const std::size_t m = s.order_;
    std::vector<Rational> v(m);
    const auto& pc = p.coefficients();
    for (std::size_t i = 0; i < std::min(m, pc.size()); ++i) {
        if (pc[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < m; ++j) {
            v[i + j] += pc[i] * s.coeffs_[j];
        }
    }
    return {std::move(v), m};
}

} // namespace gpade
