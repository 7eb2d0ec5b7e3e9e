#include "gpade/poly.hpp"

#include <algorithm>

#include "gpade/error.hpp"

namespace gpade {

namespace {

// Products below this many coefficient pairs stay on the serial kernel.
constexpr std::size_t parallel_threshold = 4096;

} // namespace

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Poly Poly::constant(const Rational& c)
{
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational& c, std::size_t k)
{
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::from_integers(const std::vector<long>& coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const long c : coeffs) {
        v.emplace_back(c);
    }
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

std::optional<std::size_t> Poly::degree() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.size() - 1;
}

std::optional<std::size_t> Poly::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0) {
            return k;
        }
    }
    return std::nullopt;
}

Rational Poly::coefficient(std::size_t k) const
{
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::operator()(const Rational& z) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    }
    return Poly(std::move(v));
}

Poly Poly::shifted_up(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> v(k + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return Poly(std::move(v));
}

Poly Poly::shifted_down(std::size_t k) const
{
    if (is_zero()) {
        return {};
    }
    if (*valuation() < k) {
        throw PreconditionError("shifted_down: polynomial not divisible by z^k");
    }
    return Poly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Poly Poly::reflected() const
{
    std::vector<Rational> v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) {
        v[k] = -v[k];
    }
    return Poly(std::move(v));
}

bool Poly::has_integer_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

Integer Poly::denominator_lcm() const
{
    Integer acc = 1;
    for (const auto& c : coeffs_) {
        acc = lcm(acc, Integer(c.get_den()));
    }
    return acc;
}

Poly& Poly::operator+=(const Poly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) {
        x *= c;
    }
    return *this;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.size() * b.size() >= parallel_threshold) {
        return mul_parallel(a, b);
    }
    return mul_serial(a, b);
}

Poly operator-(Poly a)
{
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

std::string Poly::to_string() const
{
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) {
            s += ",";
        }
        s += gpade::to_string(coeffs_[k]);
    }
    return s + "]";
}

Rational poly_height(const Poly& p)
{
    Rational h = 0;
    for (const auto& c : p.coefficients()) {
        const Rational ac = abs(c);
        if (ac > h) {
            h = ac;
        }
    }
    return h;
}

Rational product_height_bound(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        throw PreconditionError("product_height_bound: zero polynomial has no degree");
    }
    const std::size_t factor = std::min(*a.degree(), *b.degree()) + 1;
    return Rational(static_cast<unsigned long>(factor)) * poly_height(a) * poly_height(b);
}

Poly mul_serial(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    std::vector<Rational> out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] += x[i] * y[j];
        }
    }
    return Poly(std::move(out));
}

Poly mul_parallel(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    const auto& x = a.coefficients();
    const auto& y = b.coefficients();
    const auto nx = static_cast<long>(x.size());
    const auto ny = static_cast<long>(y.size());
    const long n_out = nx + ny - 1;
    std::vector<Rational> out(static_cast<std::size_t>(n_out));
    // Each output coefficient is an independent convolution sum.
#pragma omp parallel for schedule(dynamic, 8)
    for (long k = 0; k < n_out; ++k) {
        const long lo = std::max(0L, k - (ny - 1));
        const long hi = std::min(k, nx - 1);
        Rational acc = 0;
        for (long i = lo; i <= hi; ++i) {
            acc += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(k - i)];
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        throw PreconditionError("polynomial division by zero");
    }
    if (a.is_zero() || *a.degree() < *b.degree()) {
        return {Poly{}, a};
    }
    std::vector<Rational> rem = a.coefficients();
    const auto& den = b.coefficients();
    const std::size_t db = den.size() - 1;
    const Rational lead_inv = 1 / den.back();
    std::vector<Rational> quot(rem.size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        const Rational c = rem[k] * lead_inv;
        quot[k - db] = c;
        if (c == 0) {
            continue;
        }
        for (std::size_t i = 0; i <= db; ++i) {
            rem[k - db + i] -= c * den[i];
        }
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw InternalError("exact_div: nonzero remainder");
    }
    return q;
}

} // namespace gpade
