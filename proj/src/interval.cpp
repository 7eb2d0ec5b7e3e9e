#include "gpade/interval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "gpade/error.hpp"

namespace gpade {

long digits_to_bits(long digits)
{
    // log2(10) < 3.3219281
    return static_cast<long>(std::ceil(static_cast<double>(digits) * 3.3219281)) + 16;
}

namespace {

Rational mul_2exp(const Rational& x, long s)
{
    Rational r;
    if (s >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(s));
    } else {
        mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<mp_bitcnt_t>(-s));
    }
    return r;
}

Rational from_scaled(const Integer& m, long s)
{
    return mul_2exp(Rational(m), -s);
}

} // namespace

Rational round_down(const Rational& x, long bits)
{
    if (x == 0 || x.get_den() == 1) {
        return x;
    }
    const long s = bits - approx_log2(x);
    return from_scaled(floor(mul_2exp(x, s)), s);
}

Rational round_up(const Rational& x, long bits)
{
    if (x == 0 || x.get_den() == 1) {
        return x;
    }
    const long s = bits - approx_log2(x);
    return from_scaled(ceil(mul_2exp(x, s)), s);
}

IntervalReal::IntervalReal(const Rational& lo, const Rational& hi) : lo_(lo), hi_(hi)
{
    if (lo_ > hi_) {
        throw PreconditionError("interval with lo > hi");
    }
}

IntervalReal IntervalReal::rounded(long bits) const
{
    return {round_down(lo_, bits), round_up(hi_, bits)};
}

IntervalReal operator+(const IntervalReal& a, const IntervalReal& b)
{
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

IntervalReal operator-(const IntervalReal& a, const IntervalReal& b)
{
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

IntervalReal operator-(const IntervalReal& a)
{
    return {-a.hi_, -a.lo_};
}

IntervalReal operator*(const IntervalReal& a, const IntervalReal& b)
{
    if (a.is_point() && b.is_point()) {
        return IntervalReal(a.lo_ * b.lo_);
    }
    const Rational p1 = a.lo_ * b.lo_;
    const Rational p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_;
    const Rational p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

IntervalReal operator/(const IntervalReal& a, const IntervalReal& b)
{
    if (b.contains(Rational(0))) {
        throw PreconditionError("interval division by an interval containing zero");
    }
    const IntervalReal inv(1 / b.hi_, 1 / b.lo_);
    return a * inv;
}

std::string IntervalReal::to_string(int sig) const
{
    return "[" + to_scientific_down(lo_, sig) + ", " + to_scientific_up(hi_, sig) + "]";
}

std::string IntervalReal::to_exact_string() const
{
    return "[" + gpade::to_string(lo_) + ", " + gpade::to_string(hi_) + "]";
}

IntervalReal abs(const IntervalReal& x)
{
    if (x.lo() >= 0) {
        return x;
    }
    if (x.hi() <= 0) {
        return -x;
    }
    return {Rational(0), std::max(Rational(-x.lo()), x.hi())};
}

IntervalReal hull(const IntervalReal& a, const IntervalReal& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

bool certainly_less(const IntervalReal& a, const IntervalReal& b)
{
    return a.hi() < b.lo();
}

bool certainly_le(const IntervalReal& a, const IntervalReal& b)
{
    return a.hi() <= b.lo();
}

Tri less_than(const IntervalReal& x, const Rational& t)
{
    if (x.hi() < t) {
        return Tri::yes;
    }
    if (x.lo() >= t) {
        return Tri::no;
    }
    return Tri::unknown;
}

std::optional<Integer> common_floor(const IntervalReal& x)
{
    Integer a = floor(x.lo());
    if (a != floor(x.hi())) {
        return std::nullopt;
    }
    return a;
}

namespace {

// exp(y) for 0 < y <= 1/2 by Taylor series with rounded term enclosures.
IntervalReal exp_small(const Rational& y, long wbits)
{
    Rational sum_lo = 1;
    Rational sum_hi = 1;
    Rational term_lo = 1;
    Rational term_hi = 1;
    const Rational eps = mul_2exp(Rational(1), -(wbits + 4));
    for (unsigned long i = 1;; ++i) {
        term_lo = round_down(term_lo * y / i, wbits);
        term_hi = round_up(term_hi * y / i, wbits);
        sum_lo = round_down(sum_lo + term_lo, wbits);
        sum_hi = round_up(sum_hi + term_hi, wbits);
        if (term_hi < eps) {
            // Remaining terms are dominated by a geometric series of ratio y/(i+1) <= 1/4.
            sum_hi = round_up(sum_hi + term_hi, wbits);
            break;
        }
    }
    return {sum_lo, sum_hi};
}

IntervalReal exp_nonneg(const Rational& x, long bits)
{
    if (x == 0) {
        return IntervalReal(Rational(1));
    }
    const long r = std::max(0L, approx_log2(x) + 2);
    const long wbits = bits + r + 16;
    IntervalReal acc = exp_small(mul_2exp(x, -r), wbits);
    for (long i = 0; i < r; ++i) {
        acc = IntervalReal(round_down(acc.lo() * acc.lo(), wbits), round_up(acc.hi() * acc.hi(), wbits));
    }
    return acc.rounded(bits);
}

// atanh(u) for 0 <= u <= 1/3.
IntervalReal atanh_small(const Rational& u, long wbits)
{
    if (u == 0) {
        return IntervalReal(Rational(0));
    }
    const Rational u2 = u * u;
    Rational pow_lo = u;
    Rational pow_hi = u;
    Rational sum_lo = 0;
    Rational sum_hi = 0;
    const Rational eps = mul_2exp(Rational(1), -(wbits + 4));
    for (unsigned long i = 0;; ++i) {
        const unsigned long k = 2 * i + 1;
        sum_lo = round_down(sum_lo + round_down(pow_lo / k, wbits), wbits);
        sum_hi = round_up(sum_hi + round_up(pow_hi / k, wbits), wbits);
        pow_lo = round_down(pow_lo * u2, wbits);
        pow_hi = round_up(pow_hi * u2, wbits);
        if (pow_hi < eps) {
            // Tail after this term: sum_{l>i} u^(2l+1)/(2l+1) <= u^(2i+3) / (1 - u^2).
            sum_hi = round_up(sum_hi + pow_hi / (1 - u2), wbits);
            break;
        }
    }
    return {sum_lo, sum_hi};
}

IntervalReal atanh_interval(const Rational& u, long wbits)
{
    if (u < 0) {
        return -atanh_small(-u, wbits);
    }
    return atanh_small(u, wbits);
}

std::mutex log2_mutex;
std::map<long, IntervalReal> log2_cache;

} // namespace

IntervalReal exp_interval(const Rational& x, long bits)
{
    if (x >= 0) {
        return exp_nonneg(x, bits);
    }
    const IntervalReal e = exp_nonneg(-x, bits + 4);
    return IntervalReal(round_down(1 / e.hi(), bits), round_up(1 / e.lo(), bits));
}

IntervalReal exp_interval(const IntervalReal& x, long bits)
{
    if (x.is_point()) {
        return exp_interval(x.lo(), bits);
    }
    return {exp_interval(x.lo(), bits).lo(), exp_interval(x.hi(), bits).hi()};
}

IntervalReal log2_interval(long bits)
{
    {
        std::lock_guard<std::mutex> lock(log2_mutex);
        auto it = log2_cache.lower_bound(bits);
        if (it != log2_cache.end()) {
            return it->second;
        }
    }
    // log 2 = 2 atanh(1/3)
    const IntervalReal a = atanh_small(Rational(1, 3), bits + 8);
    const IntervalReal v = IntervalReal(2 * a.lo(), 2 * a.hi()).rounded(bits);
    std::lock_guard<std::mutex> lock(log2_mutex);
    log2_cache.emplace(bits, v);
    return v;
}

IntervalReal log_interval(const Rational& x, long bits)
{
    if (x <= 0) {
        throw PreconditionError("log of a non-positive number");
    }
    if (x == 1) {
        return IntervalReal(Rational(0));
    }
    long k = approx_log2(x);
    Rational y = mul_2exp(x, -k);
    while (y >= Rational(3, 2)) {
        y /= 2;
        ++k;
    }
    while (y < Rational(3, 4)) {
        y *= 2;
        --k;
    }
    const long kbits = k == 0 ? 0 : static_cast<long>(bit_length(Integer(std::abs(k))));
    const long wbits = bits + kbits + 16;
    // y in [3/4, 3/2) gives u in [-1/7, 1/5].
    const Rational u = (y - 1) / (y + 1);
    IntervalReal result = IntervalReal(2) * atanh_interval(u, wbits);
    if (k != 0) {
        result = result + IntervalReal(Rational(k)) * log2_interval(wbits);
    }
    return result.rounded(bits);
}

IntervalReal log_interval(const IntervalReal& x, long bits)
{
    if (x.is_point()) {
        return log_interval(x.lo(), bits);
    }
    return {log_interval(x.lo(), bits).lo(), log_interval(x.hi(), bits).hi()};
}

IntervalReal sqrt_interval(const Rational& x, long bits)
{
    if (x < 0) {
        throw PreconditionError("sqrt of a negative number");
    }
    if (x == 0) {
        return IntervalReal(Rational(0));
    }
    if (mpz_perfect_square_p(x.get_num_mpz_t()) != 0 && mpz_perfect_square_p(x.get_den_mpz_t()) != 0) {
        return IntervalReal(make_rational(sqrt(Integer(x.get_num())), sqrt(Integer(x.get_den()))));
    }
    const long s = std::max(0L, bits - approx_log2(x) / 2 + 4);
    const Integer lo_sq = floor(mul_2exp(x, 2 * s));
    Integer root = sqrt(lo_sq);
    Integer root_hi = root + 1;
    return {from_scaled(root, s), from_scaled(root_hi, s)};
}

IntervalReal pow_interval(const IntervalReal& base, const IntervalReal& exponent, long bits)
{
    if (!base.positive()) {
        throw PreconditionError("pow_interval requires a positive base");
    }
    const long wbits = bits + 32;
    const IntervalReal l = log_interval(base, wbits);
    return exp_interval((exponent * l).rounded(wbits), bits);
}

IntervalReal interval_refine(const Producer& producer, const Rational& width)
{
    if (width <= 0) {
        throw PreconditionError("interval_refine: width must be positive");
    }
    IntervalReal r = producer(width);
    if (r.width() > width) {
        throw InternalError("producer returned an interval wider than requested");
    }
    return r;
}

Producer constant_producer(const Rational& value)
{
    return [value](const Rational&) { return IntervalReal(value); };
}

namespace {

struct SeriesState {
    std::function<Rational(std::size_t)> coeff;
    Rational z;
    Rational scale;
    Rational ratio; // growth * |z|
    Rational growth;
    std::size_t min_terms = 0;

    std::mutex mutex;
    std::size_t terms = 0; // partial sum covers n < terms
    Rational partial = 0;
    Rational zpow = 1; // z^terms

    // Tail bound for sum_{n >= M} with M = terms: scale * growth * ratio^M / (1 - ratio).
    [[nodiscard]] Rational tail(std::size_t m) const
    {
        return scale * growth * pow(ratio, static_cast<long>(m)) / (1 - ratio);
    }
};

} // namespace

Producer series_producer(std::function<Rational(std::size_t)> coeff, const Rational& z, const Rational& scale,
                         const Rational& growth, std::size_t min_terms)
{
    const Rational ratio = growth * abs(z);
    if (ratio >= 1) {
        throw PreconditionError("no convergent tail bound");
    }
    auto state = std::make_shared<SeriesState>();
    state->coeff = std::move(coeff);
    state->z = z;
    state->scale = abs(scale);
    state->growth = growth;
    state->ratio = ratio;
    state->min_terms = min_terms;
    return [state](const Rational& width) -> IntervalReal {
        if (width <= 0) {
            throw PreconditionError("series producer: width must be positive");
        }
        std::lock_guard<std::mutex> lock(state->mutex);
        if (state->z == 0 && state->min_terms == 0) {
            return IntervalReal(state->coeff(0));
        }
        // Smallest M >= min_terms with tail(M) <= width / 4.
        std::size_t m = std::max<std::size_t>(state->min_terms, 1);
        if (state->ratio > 0) {
            const Rational target = width / 4;
            const double lr = std::log(state->ratio.get_d());
            const double est = (static_cast<double>(approx_log2(target)) * std::log(2.0) -
                                static_cast<double>(approx_log2(state->scale * state->growth / (1 - state->ratio) + 1)) *
                                    std::log(2.0)) /
                               lr;
            if (std::isfinite(est) && est > static_cast<double>(m)) {
                m = static_cast<std::size_t>(est) > 4 ? static_cast<std::size_t>(est) - 4 : m;
            }
            while (state->tail(m) > target) {
                ++m;
            }
        }
        while (state->terms < m) {
            state->partial += state->coeff(state->terms) * state->zpow;
            state->zpow *= state->z;
            ++state->terms;
        }
        // Terms beyond m in the cache only tighten the enclosure; use the cached sum if longer.
        const std::size_t used = state->terms;
        const Rational t = state->ratio == 0 ? Rational(0) : state->tail(used);
        const Rational& s = state->partial;
        // Absolute rounding grain of at most width / 8.
        const long grain_bits = 4 - approx_log2(width);
        auto down = [grain_bits](const Rational& x) { return from_scaled(floor(mul_2exp(x, grain_bits)), grain_bits); };
        auto up = [grain_bits](const Rational& x) { return from_scaled(ceil(mul_2exp(x, grain_bits)), grain_bits); };
        return {down(s - t), up(s + t)};
    };
}

} // namespace gpade
