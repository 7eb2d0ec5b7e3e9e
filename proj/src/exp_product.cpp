#include "gpade/exp_product.hpp"

#include "gpade/error.hpp"

namespace gpade {

ExpProduct ExpProduct::rational(const Rational& value)
{
    if (value <= 0) {
        throw PreconditionError("ExpProduct requires a positive value");
    }
    ExpProduct r;
    r.coefficient_ = value;
    return r;
}

ExpProduct ExpProduct::exp(const Rational& exponent)
{
    ExpProduct r;
    r.e_exponent_ = exponent;
    return r;
}

void ExpProduct::absorb(const Rational& base, const Rational& exponent)
{
    if (base == 1 || exponent == 0) {
        return;
    }
    if (is_integer(exponent)) {
        coefficient_ *= gpade::pow(base, exponent.get_num().get_si());
        return;
    }
    Rational& e = radicals_[base];
    e += exponent;
    if (is_integer(e)) {
        const long k = e.get_num().get_si();
        radicals_.erase(base);
        coefficient_ *= gpade::pow(base, k);
    }
}

ExpProduct ExpProduct::pow(const Rational& exponent) const
{
    ExpProduct r;
    r.e_exponent_ = e_exponent_ * exponent;
    r.absorb(coefficient_, exponent);
    for (const auto& [base, e] : radicals_) {
        r.absorb(base, e * exponent);
    }
    return r;
}

ExpProduct operator*(const ExpProduct& a, const ExpProduct& b)
{
    ExpProduct r = a;
    r.e_exponent_ += b.e_exponent_;
    r.coefficient_ *= b.coefficient_;
    for (const auto& [base, e] : b.radicals_) {
        r.absorb(base, e);
    }
    return r;
}

bool operator==(const ExpProduct& a, const ExpProduct& b)
{
    return a.coefficient_ == b.coefficient_ && a.e_exponent_ == b.e_exponent_ && a.radicals_ == b.radicals_;
}

IntervalReal ExpProduct::log(long bits) const
{
    const long wbits = bits + 16;
    IntervalReal acc = log_interval(coefficient_, wbits) + IntervalReal(e_exponent_);
    for (const auto& [base, e] : radicals_) {
        acc = acc + IntervalReal(e) * log_interval(base, wbits);
    }
    return acc.rounded(bits);
}

IntervalReal ExpProduct::value(long bits) const
{
    if (is_rational()) {
        return IntervalReal(coefficient_);
    }
    return exp_interval(log(bits + 32), bits);
}

namespace {

std::string wrap(const Rational& r)
{
    return is_integer(r) && r >= 0 ? gpade::to_string(r) : "(" + gpade::to_string(r) + ")";
}

} // namespace

std::string ExpProduct::to_string() const
{
    std::string s;
    auto append = [&s](const std::string& part) {
        if (!s.empty()) {
            s += "*";
        }
        s += part;
    };
    if (coefficient_ != 1 || (e_exponent_ == 0 && radicals_.empty())) {
        append(gpade::to_string(coefficient_));
    }
    for (const auto& [base, e] : radicals_) {
        append(wrap(base) + "^" + wrap(e));
    }
    if (e_exponent_ != 0) {
        append("e^" + wrap(e_exponent_));
    }
    return s;
}

} // namespace gpade
