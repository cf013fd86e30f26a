#pragma once

#include <random>

#include "qrsid/monomial.hpp"

namespace qrsid::testing {

inline std::mt19937_64 rng(unsigned long seed = 0x9e3779b97f4a7c15ULL) {
    return std::mt19937_64(seed);
}

inline Rational random_small_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return rat(num(g), den(g));
}

inline Scalar random_scalar(std::mt19937_64& g) {
    return Scalar(random_small_rational(g), random_small_rational(g), random_small_rational(g),
                  random_small_rational(g));
}

inline Scalar random_unit_coeff(std::mt19937_64& g) {
    switch (g() % 4) {
        case 0: return Scalar::one();
        case 1: return -Scalar::one();
        case 2: return Scalar::i_unit();
        default: return -Scalar::i_unit();
    }
}

/// Random monomial with positive q-order on grid 1 or 2.
inline Monomial random_pos_monomial(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(1, 6);
    std::uniform_int_distribution<long> den(1, 2);
    return Monomial(random_unit_coeff(g), rat(num(g), den(g)));
}

inline QSeries random_series(std::mt19937_64& g, const Rational& cap, int grid = 1,
                             bool unit_constant = false) {
    QSeries f(grid, cap);
    long capk = rat_floor(cap * grid);
    std::uniform_int_distribution<long> pick(0, 2);
    for (long k = unit_constant ? 1 : 0; k <= capk; ++k) {
        if (pick(g) == 0) f.add_term(k, random_scalar(g));
    }
    if (unit_constant) f.add_term(0, Scalar::one());
    return f;
}

} // namespace qrsid::testing
