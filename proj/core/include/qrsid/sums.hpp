#pragma once

#include <string>
#include <vector>

#include "qrsid/products.hpp"

namespace qrsid {

/// Integer affine form c1 i1 + ... + ck ik + constant.
struct LinForm {
    std::vector<long> coeffs;
    long constant = 0;

    long eval(const std::vector<long>& pt) const {
        long acc = constant;
        for (size_t m = 0; m < coeffs.size(); ++m) acc += coeffs[m] * pt[m];
        return acc;
    }
    bool operator==(const LinForm& o) const = default;
};

/// Rational quadratic polynomial sum M[a][b] i_a i_b + lin . i + constant
/// with M symmetric.
struct QuadForm {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> linear;
    Rational constant = Rational(0);

    static QuadForm zero(int k);
    Rational eval(const std::vector<long>& pt) const;
    bool operator==(const QuadForm& o) const = default;
};

/// One Pochhammer denominator (q^modulus; q^modulus)_{form(i)}.
struct Subscript {
    Rational modulus = Rational(1);
    LinForm form;
    bool operator==(const Subscript& o) const = default;
};

/// Parameter slot: the term carries value(name)^{form(i)}.
struct ParamForm {
    std::string name;
    LinForm form;
    bool operator==(const ParamForm& o) const = default;
};

/// One lattice sum
///   weight * sum_{i in region} i^{T(i)} prod_p value_p^{M_p(i)}
///            q^{Q(i)} / prod_j (q^{n_j}; q^{n_j})_{L_j(i)}
/// over the region { all i_m >= 0, all L_j(i) >= 0 }. The unit form T must be
/// integer-valued on the region; (-1)^t enters as i^{2t}.
struct SumComponent {
    Monomial weight = Monomial::one();
    QuadForm quad;
    QuadForm unit;
    std::vector<Subscript> subscripts;
    std::vector<ParamForm> params;
    int grid = 1;
};

/// A sum side is a finite sum of weighted lattice-sum components (most
/// identities need exactly one).
struct SumSideSpec {
    int k = 1;
    std::vector<SumComponent> components;

    bool has_params() const;
};

struct EvalConfig {
    /// Safety bound: enumeration aborts past index sum 64*(cap+1).
    long safety_layer_factor = 64;
    /// Successive layers whose minimum effective exponent must exceed the cap
    /// before enumeration stops.
    int quiet_layers = 8;
    /// Hard bound on enumerated lattice points (guards k>=4 runaways).
    long long point_budget = 80'000'000;
};

/// Exact truncated evaluation of all components. NonTerminating when the
/// frontier never clears the cap within the safety bound.
QSeries sum_side_eval(const SumSideSpec& spec, const ParamAssignment& assign,
                      const Rational& cap, const EvalConfig& config = {});

/// Absorbs an assignment whose coefficients are powers of i into the spec:
/// exponents move into Q, unit coefficients into T. GridOverflow if the
/// folded exponents leave the supported grid.
SumSideSpec fold_params(const SumSideSpec& spec, const ParamAssignment& assign);

} // namespace qrsid
