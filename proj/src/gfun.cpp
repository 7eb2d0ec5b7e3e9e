#include "gpade/gfun.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <vector>

#include <json.hpp>

#include "gpade/error.hpp"

namespace gpade {

namespace {

// Grow-on-demand sequence where entry n is computed from the entries before it.
template <class T>
class LazyTable {
public:
    using Step = std::function<T(std::size_t n, const std::vector<T>& prev)>;
    explicit LazyTable(Step step) : step_(std::move(step)) {}

    T get(std::size_t n)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        while (values_.size() <= n) {
            values_.push_back(step_(values_.size(), values_));
        }
        return values_[n];
    }

private:
    Step step_;
    std::mutex mutex_;
    std::vector<T> values_;
};

std::shared_ptr<LazyTable<Integer>> lcm_table()
{
    return std::make_shared<LazyTable<Integer>>([](std::size_t n, const std::vector<Integer>& prev) {
        if (n == 0) {
            return Integer(1);
        }
        return lcm(prev[n - 1], Integer(static_cast<unsigned long>(n)));
    });
}

Poly one_minus_z()
{
    return Poly::from_integers({1, -1});
}

GFunctionSystem make_polylog(long s)
{
    if (s < 1) {
        throw PreconditionError("polylog order must be >= 1");
    }
    const auto N = static_cast<std::size_t>(s);
    auto table = lcm_table();
    auto coeff = [](std::size_t j, std::size_t n) -> Rational {
        if (n == 0) {
            return 0;
        }
        return Rational(1) / Rational(pow(Integer(static_cast<unsigned long>(n)), j));
    };
    auto denom = [table, s](std::size_t n) { return pow(table->get(n), static_cast<unsigned long>(s)); };
    RatFunMatrix A(N + 1);
    A.set(1, 0, Poly::constant(1), one_minus_z());
    for (std::size_t j = 2; j <= N; ++j) {
        A.set(j, j - 1, Poly::constant(1), Poly::monomial(1, 1));
    }
    // Li_1' = 1/(1-z), Li_j' = Li_{j-1}/z
    Poly D = s == 1 ? one_minus_z() : Poly::from_integers({0, 1, -1});
    const long d = s == 1 ? 1 : 2;
    return {"polylog" + std::to_string(s), N, coeff, denom, std::move(A), std::move(D), d, Rational(1),
            ExpProduct::exp(Rational(s))};
}

GFunctionSystem make_log1m()
{
    auto table = lcm_table();
    auto coeff = [](std::size_t, std::size_t n) -> Rational {
        if (n == 0) {
            return 0;
        }
        return Rational(-1, static_cast<unsigned long>(n));
    };
    auto denom = [table](std::size_t n) { return table->get(n); };
    RatFunMatrix A(2);
    // log(1-z)' = -1/(1-z)
    A.set(1, 0, Poly::constant(-1), one_minus_z());
    return {"log1m", 1, coeff, denom, std::move(A), one_minus_z(), 1, Rational(1), ExpProduct::exp(Rational(1))};
}

std::vector<Integer> prime_divisors(Integer v)
{
    std::vector<Integer> out;
    for (Integer p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0) {
                v /= p;
            }
        }
    }
    if (v > 1) {
        out.push_back(v);
    }
    return out;
}

GFunctionSystem make_binom_power(const Rational& alpha)
{
    if (is_integer(alpha)) {
        throw PreconditionError("binom_power with integer exponent is a polynomial, F in Q(z)");
    }
    auto coeffs = std::make_shared<LazyTable<Rational>>([alpha](std::size_t n, const std::vector<Rational>& prev) {
        if (n == 0) {
            return Rational(1);
        }
        // (-1)^n binom(alpha, n) = prod_{i<n} (i - alpha) / (i + 1)
        Rational r = prev[n - 1] * (Rational(static_cast<unsigned long>(n - 1)) - alpha) /
                     Rational(static_cast<unsigned long>(n));
        return r;
    });
    auto denoms = std::make_shared<LazyTable<Integer>>([coeffs](std::size_t n, const std::vector<Integer>& prev) {
        const Integer den(coeffs->get(n).get_den());
        return n == 0 ? den : lcm(prev[n - 1], den);
    });
    auto coeff = [coeffs](std::size_t, std::size_t n) { return coeffs->get(n); };
    auto denom = [denoms](std::size_t n) { return denoms->get(n); };

    const Integer u(alpha.get_num());
    const Integer v(alpha.get_den());
    RatFunMatrix A(2);
    // ((1-z)^alpha)' = -alpha (1-z)^alpha / (1-z)
    A.set(1, 1, Poly::constant(-alpha), one_minus_z());
    Poly D = one_minus_z() * Rational(v);
    // The denominator of binom(u/v, n) divides v^n prod_{p | v} p^{v_p(n!)}, and v_p(n!) <= n/(p-1).
    ExpProduct Dgrowth = ExpProduct::rational(Rational(v));
    for (const auto& p : prime_divisors(v)) {
        Dgrowth = Dgrowth * ExpProduct::rational(Rational(p)).pow(Rational(1) / Rational(p - 1));
    }
    // |binom(alpha, n)| <= prod_{i<=n} (1 + |alpha|/i) <= (1 + |alpha|)^n
    const Rational C = 1 + abs(alpha);
    return {"binom(" + to_string(alpha) + ")", 1, coeff, denom, std::move(A), std::move(D), 1, C, Dgrowth};
}

} // namespace

GFunctionSystem::GFunctionSystem(std::string key, std::size_t N, CoefficientOracle coeff, DenominatorOracle denom,
                                 RatFunMatrix A, Poly D, long d, Rational C, ExpProduct Dgrowth)
    : key_(std::move(key)),
      N_(N),
      coeff_(std::move(coeff)),
      denom_(std::move(denom)),
      A_(std::move(A)),
      D_(std::move(D)),
      d_(d),
      C_(std::move(C)),
      Dgrowth_(std::move(Dgrowth))
{
    if (N_ < 1) {
        throw PreconditionError("a G-function system needs N >= 1");
    }
    if (A_.dim() != N_ + 1) {
        throw PreconditionError("A(z) must be (N+1)x(N+1)");
    }
    if (!A_.row_is_zero(0)) {
        throw PreconditionError("the zero-th row of A must vanish");
    }
    if (D_.is_zero() || !D_.has_integer_coefficients()) {
        throw PreconditionError("D(z) must be a nonzero integer polynomial");
    }
    if (d_ < 1 || *D_.degree() > static_cast<std::size_t>(d_)) {
        throw PreconditionError("degree bound d must satisfy 1 <= d and deg D <= d");
    }
    DA_ = A_.cleared(D_);
    for (const auto& row : DA_) {
        for (const auto& e : row) {
            if (!e.is_zero() && (!e.has_integer_coefficients() || *e.degree() > static_cast<std::size_t>(d_ - 1))) {
                throw PreconditionError("D*A must have integer entries of degree <= d-1");
            }
        }
    }
    if (C_ < 1) {
        throw PreconditionError("growth constant C must be >= 1");
    }
}

Rational GFunctionSystem::coefficient(std::size_t j, std::size_t n) const
{
    if (j < 1 || j > N_) {
        throw PreconditionError("coefficient index j out of range 1..N");
    }
    return coeff_(j, n);
}

void GFunctionSystem::override_C(const Rational& C)
{
    if (C < 1) {
        throw PreconditionError("growth constant C must be >= 1");
    }
    C_ = C;
    verified_range_ = -1;
}

void GFunctionSystem::override_Dgrowth(const ExpProduct& Dgrowth)
{
    Dgrowth_ = Dgrowth;
    verified_range_ = -1;
}

GFunctionSystem GFunctionSystem::reflected() const
{
    auto coeff = [inner = coeff_](std::size_t j, std::size_t n) {
        const Rational c = inner(j, n);
        return n % 2 == 0 ? c : Rational(-c);
    };
    GFunctionSystem out(key_ + "(-z)", N_, coeff, denom_, A_.reflected(), D_.reflected(), d_, C_, Dgrowth_);
    out.verified_range_ = verified_range_;
    return out;
}

SeriesTrunc GFunctionSystem::series(std::size_t j, std::size_t order) const
{
    if (j == 0) {
        return SeriesTrunc::from_poly(Poly::constant(1), order);
    }
    return SeriesTrunc::from_oracle([this, j](std::size_t n) { return coefficient(j, n); }, order);
}

GrowthReport verify_growth(GFunctionSystem& sys, long n_max, long bits)
{
    if (n_max < 1) {
        throw PreconditionError("verify_growth requires n_max >= 1");
    }
    GrowthReport rep;
    rep.n_max = n_max;
    const long max_bits = bits * 16;
    Rational c_pow = sys.C(); // C^(n+1)
    Integer prev_dn = 0;
    auto fail = [&rep](long n, const char* kind) {
        rep.first_violation = n;
        rep.violation_kind = kind;
    };
    for (long n = 0; n <= n_max && !rep.first_violation; ++n) {
        const auto un = static_cast<std::size_t>(n);
        for (std::size_t j = 1; j <= sys.N(); ++j) {
            if (abs(sys.coefficient(j, un)) > c_pow) {
                rep.C_ok = false;
                fail(n, "C");
                break;
            }
        }
        if (rep.first_violation) {
            break;
        }
        c_pow *= sys.C();

        const Integer dn = sys.denominator(un);
        if (dn <= 0) {
            rep.integrality_ok = false;
            fail(n, "integrality");
            break;
        }
        // With d_{n-1} | d_n only the new coefficients f_{j,n} need checking.
        const bool incremental = n > 0 && dn % prev_dn == 0;
        for (std::size_t j = 1; j <= sys.N() && !rep.first_violation; ++j) {
            for (long m = incremental ? n : 0; m <= n; ++m) {
                if (!is_integer(Rational(dn) * sys.coefficient(j, static_cast<std::size_t>(m)))) {
                    rep.integrality_ok = false;
                    fail(n, "integrality");
                    break;
                }
            }
        }
        if (rep.first_violation) {
            break;
        }
        prev_dn = dn;

        // log d_n <= (n+1) log Dgrowth
        for (long b = bits;; b *= 2) {
            const IntervalReal lhs = log_interval(Rational(dn), b);
            const IntervalReal rhs = IntervalReal(Rational(n + 1)) * sys.Dgrowth().log(b);
            if (lhs.hi() <= rhs.lo()) {
                break;
            }
            if (lhs.lo() > rhs.hi()) {
                rep.D_ok = false;
                fail(n, "D");
                break;
            }
            if (b * 2 > max_bits) {
                rep.indeterminate = true;
                rep.D_ok = false;
                fail(n, "D");
                break;
            }
        }
    }
    const long good = rep.first_violation ? *rep.first_violation - 1 : n_max;
    if (good > sys.verified_range_) {
        sys.verified_range_ = good;
    }
    return rep;
}

bool verify_differential_system(const GFunctionSystem& sys, std::size_t order)
{
    if (order < 2) {
        throw PreconditionError("verify_differential_system needs order >= 2");
    }
    const std::size_t dim = sys.N() + 1;
    std::vector<SeriesTrunc> Y;
    Y.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Y.push_back(sys.series(j, order));
    }
    const auto& DA = sys.cleared_matrix();
    for (std::size_t i = 0; i < dim; ++i) {
        const SeriesTrunc lhs = sys.D_poly() * Y[i].derivative();
        SeriesTrunc rhs(std::vector<Rational>(order - 1), order - 1);
        for (std::size_t j = 0; j < dim; ++j) {
            rhs = rhs + DA[i][j] * Y[j];
        }
        for (std::size_t n = 0; n < order - 1; ++n) {
            if (lhs[n] != rhs[n]) {
                return false;
            }
        }
    }
    return true;
}

GFunctionSystem builtin(const std::string& family, const BuiltinParams& params)
{
    if (family == "polylog") {
        return make_polylog(params.s);
    }
    if (family == "log1m") {
        return make_log1m();
    }
    if (family == "binom_power") {
        return make_binom_power(params.alpha);
    }
    throw PreconditionError("unknown G-function family '" + family + "'");
}

namespace {

ExpProduct parse_exp_product(const nlohmann::json& j)
{
    ExpProduct r = ExpProduct::rational(parse_rational(j.value("coefficient", std::string("1"))));
    r = r * ExpProduct::exp(parse_rational(j.value("e_exponent", std::string("0"))));
    if (j.contains("radicals")) {
        for (const auto& pair : j.at("radicals")) {
            r = r * ExpProduct::rational(parse_rational(pair.at(0).get<std::string>()))
                        .pow(parse_rational(pair.at(1).get<std::string>()));
        }
    }
    return r;
}

std::string json_scalar(const nlohmann::json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

} // namespace

GFunctionSystem load_system_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot open system file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("system file '" + path + "': " + e.what());
    }
    try {
        const std::string name = doc.at("name").get<std::string>();
        BuiltinParams params;
        if (doc.contains("params")) {
            const auto& p = doc.at("params");
            if (p.contains("s")) {
                params.s = p.at("s").get<long>();
            }
            if (p.contains("alpha")) {
                params.alpha = parse_rational(json_scalar(p.at("alpha")));
            }
        }
        GFunctionSystem sys = builtin(name, params);
        if (doc.contains("C")) {
            sys.override_C(parse_rational(json_scalar(doc.at("C"))));
        }
        if (doc.contains("Dgrowth")) {
            sys.override_Dgrowth(parse_exp_product(doc.at("Dgrowth")));
        }
        return sys;
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError("system file '" + path + "': " + e.what());
    }
}

GFunctionSystem resolve_system(const std::string& name_or_path)
{
    const std::string& s = name_or_path;
    if (s == "log1m") {
        return make_log1m();
    }
    if (s.rfind("polylog", 0) == 0 && s.size() > 7) {
        return make_polylog(parse_integer(s.substr(7)).get_si());
    }
    for (const std::string prefix : {"binom:", "binom_power:"}) {
        if (s.rfind(prefix, 0) == 0) {
            return make_binom_power(parse_rational(s.substr(prefix.size())));
        }
    }
    if (std::filesystem::exists(s)) {
        return load_system_file(s);
    }
    throw PreconditionError("unknown system '" + s + "'");
}

} // namespace gpade
