#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>

#include "gpade/exp_product.hpp"
#include "gpade/ratfun.hpp"
#include "gpade/series.hpp"

namespace gpade {

struct GrowthReport {
    long n_max = 0;
    bool C_ok = true;
    bool D_ok = true;
    bool integrality_ok = true;
    // Some d_n vs Dgrowth^(n+1) comparison stayed ambiguous at the precision cap.
    bool indeterminate = false;
    // Smallest n at which any check failed.
    std::optional<long> first_violation;
    // Which check failed there: "C", "D" or "integrality".
    std::string violation_kind;
};

// The vector Y = (1, F_1, ..., F_N) of G-functions with rational Taylor coefficients, its
// first-order system Y' = A Y, a denominator polynomial D(z) clearing A, the degree bound d,
// and growth constants with |f_{j,n}| <= C^(n+1) and d_n <= Dgrowth^(n+1).
//
// Dgrowth is only trusted on [0, verified_range()]; verify_growth() extends that range.
class GFunctionSystem {
public:
    using CoefficientOracle = std::function<Rational(std::size_t j, std::size_t n)>;
    using DenominatorOracle = std::function<Integer(std::size_t n)>;

    GFunctionSystem(std::string key, std::size_t N, CoefficientOracle coeff, DenominatorOracle denom, RatFunMatrix A,
                    Poly D, long d, Rational C, ExpProduct Dgrowth);

    [[nodiscard]] const std::string& key() const { return key_; }
    [[nodiscard]] std::size_t N() const { return N_; }
    // f_{j,n} for j in 1..N
    [[nodiscard]] Rational coefficient(std::size_t j, std::size_t n) const;
    [[nodiscard]] Integer denominator(std::size_t n) const { return denom_(n); }
    [[nodiscard]] const RatFunMatrix& A() const { return A_; }
    [[nodiscard]] const Poly& D_poly() const { return D_; }
    [[nodiscard]] const PolyMatrix& cleared_matrix() const { return DA_; }
    [[nodiscard]] long d() const { return d_; }
    [[nodiscard]] const Rational& C() const { return C_; }
    [[nodiscard]] const ExpProduct& Dgrowth() const { return Dgrowth_; }
    [[nodiscard]] Rational height_D() const { return poly_height(D_); }
    // -1 until verify_growth has succeeded on some range.
    [[nodiscard]] long verified_range() const { return verified_range_; }

    void override_C(const Rational& C);
    void override_Dgrowth(const ExpProduct& Dgrowth);

    // The system satisfied by Y(-z): f_{j,n} -> (-1)^n f_{j,n}, A(z) -> -A(-z), D(z) -> D(-z).
    [[nodiscard]] GFunctionSystem reflected() const;

    [[nodiscard]] SeriesTrunc series(std::size_t j, std::size_t order) const;

private:
    friend GrowthReport verify_growth(GFunctionSystem& sys, long n_max, long bits);

    std::string key_;
    std::size_t N_;
    CoefficientOracle coeff_;
    DenominatorOracle denom_;
    RatFunMatrix A_;
    Poly D_;
    PolyMatrix DA_;
    long d_;
    Rational C_;
    ExpProduct Dgrowth_;
    long verified_range_ = -1;
};


// Checks |f_{j,n}| <= C^(n+1), d_n <= Dgrowth^(n+1) and d_n f_{j,m} in Z (m <= n) for all n <= n_max.
// Extends verified_range to n_max on success, or to first_violation - 1.
// Not safe to run concurrently with other users of the same system object.
GrowthReport verify_growth(GFunctionSystem& sys, long n_max, long bits = 256);

// Exact check of Y' = A Y: D * Y' == (D A) * Y coefficientwise modulo z^order.
bool verify_differential_system(const GFunctionSystem& sys, std::size_t order);

struct BuiltinParams {
    long s = 2;          // polylog order
    Rational alpha = 0;  // binom_power exponent
};

// family: "polylog", "log1m" or "binom_power".
GFunctionSystem builtin(const std::string& family, const BuiltinParams& params);

// "polylog<s>", "log1m", "binom:<u>/<v>", or a path to a JSON system definition file.
GFunctionSystem resolve_system(const std::string& name_or_path);
GFunctionSystem load_system_file(const std::string& path);

} // namespace gpade
