#include "gpade/ratfun.hpp"

#include "gpade/error.hpp"

namespace gpade {

RatFunMatrix::RatFunMatrix(std::size_t dim) : entries_(dim, std::vector<RatFun>(dim)) {}

void RatFunMatrix::set(std::size_t i, std::size_t j, Poly num, Poly den)
{
    if (den.is_zero()) {
        throw PreconditionError("rational function with zero denominator");
    }
    entries_.at(i).at(j) = RatFun{std::move(num), std::move(den)};
}

bool RatFunMatrix::row_is_zero(std::size_t i) const
{
    for (const auto& e : entries_.at(i)) {
        if (!e.num.is_zero()) {
            return false;
        }
    }
    return true;
}

PolyMatrix RatFunMatrix::cleared(const Poly& D) const
{
    PolyMatrix out(dim(), std::vector<Poly>(dim()));
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            const auto& e = entries_[i][j];
            if (e.num.is_zero()) {
                continue;
            }
            auto [q, r] = divmod(D * e.num, e.den);
            if (!r.is_zero()) {
                throw PreconditionError("denominator polynomial does not clear A(z)");
            }
            out[i][j] = std::move(q);
        }
    }
    return out;
}

RatFunMatrix RatFunMatrix::reflected() const
{
    RatFunMatrix out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) {
            const auto& e = entries_[i][j];
            out.set(i, j, -e.num.reflected(), e.den.reflected());
        }
    }
    return out;
}

} // namespace gpade
