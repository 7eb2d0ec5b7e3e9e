#pragma once

#include <random>

#include "gpade/poly.hpp"

namespace gpade::testing {

// Fixed seed: property tests must be reproducible.
inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20241018);
    return gen;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational random_rational(long bound = 1000)
{
    Rational r(uniform(-bound, bound), static_cast<unsigned long>(uniform(1, bound)));
    r.canonicalize();
    return r;
}

inline Poly random_poly(long max_deg, long bound = 50)
{
    std::vector<Rational> c;
    const long deg = uniform(0, max_deg);
    for (long i = 0; i <= deg; ++i) {
        Rational r(uniform(-bound, bound), static_cast<unsigned long>(uniform(1, 7)));
        r.canonicalize();
        c.push_back(r);
    }
    return Poly(c);
}

} // namespace gpade::testing
