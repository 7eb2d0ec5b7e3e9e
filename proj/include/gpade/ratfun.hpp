#pragma once

#include <cstddef>
#include <vector>

#include "gpade/poly.hpp"

namespace gpade {

using PolyMatrix = std::vector<std::vector<Poly>>;

struct RatFun {
    Poly num;
    Poly den = Poly::constant(1);
};

// Square matrix of rational functions, rows/cols indexed 0..N.
class RatFunMatrix {
public:
    RatFunMatrix() = default;
    explicit RatFunMatrix(std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return entries_.size(); }
    [[nodiscard]] const RatFun& at(std::size_t i, std::size_t j) const { return entries_.at(i).at(j); }
    // Rejects a zero denominator.
    void set(std::size_t i, std::size_t j, Poly num, Poly den);

    [[nodiscard]] bool row_is_zero(std::size_t i) const;

    // D * A with every entry reduced to a polynomial; throws PreconditionError if some
    // entry's denominator does not divide D times its numerator.
    [[nodiscard]] PolyMatrix cleared(const Poly& D) const;

    // A(z) -> -A(-z), the matrix of the system for Y(-z).
    [[nodiscard]] RatFunMatrix reflected() const;

private:
    std::vector<std::vector<RatFun>> entries_;
};

} // namespace gpade
