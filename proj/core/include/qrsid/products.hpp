#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrsid/monomial.hpp"

namespace qrsid {

using ParamAssignment = std::map<std::string, Monomial>;

/// Truncated (a; q^step)_n = prod_{k<n} (1 - a q^(step k)).
QSeries poch_finite(const Monomial& a, const Rational& step, long n, const Rational& cap);

/// Truncated (a; q^step)_inf. Formal convergence requires a.qexp >= 0 and, at
/// qexp 0, coeff != 1; otherwise DivergentProduct. The zero monomial gives 1.
QSeries poch_inf(const Monomial& a, const Rational& step, const Rational& cap);

/// One factor (base; q^modulus)_inf^power where
///   base = coeff * q^qexp * prod params[name]^e.
/// Parameter slots are resolved against a ParamAssignment at evaluation time.
struct ProductFactor {
    Scalar coeff = Scalar::one();
    Rational qexp = Rational(0);
    std::map<std::string, int> params;
    Rational modulus = Rational(1);
    int power = 1;

    Monomial base(const ParamAssignment& assign) const;
    bool operator==(const ProductFactor& o) const = default;
};

/// weight * prod factors; the weight is an exact monomial.
struct ProductTerm {
    Monomial weight = Monomial::one();
    std::vector<ProductFactor> factors;
    bool operator==(const ProductTerm& o) const = default;
};

/// Finite sum of weighted Pochhammer products: the right side of an identity.
struct ProductExpr {
    std::vector<ProductTerm> terms;
    bool operator==(const ProductExpr& o) const = default;

    bool has_params() const;
    std::vector<std::string> param_names() const;
};

QSeries product_term_eval(const ProductTerm& term, const ParamAssignment& assign,
                          const Rational& cap);
QSeries product_expr_eval(const ProductExpr& expr, const ParamAssignment& assign,
                          const Rational& cap);

/// Recovered infinite-product shape: f = prod (1 - q^a)^(-e_a) up to the cap.
struct ProductExponent {
    Rational a;
    Rational e;
};

/// Logarithmic peel-off of product exponents. Requires constant term 1; works
/// on the integer grid after clearing the denominator, mapping exponents back.
/// NonRationalExponent when a recovered e_a leaves the rational subfield.
std::vector<ProductExponent> prodmake(const QSeries& f, const Rational& cap);

/// Expands prod (1 - q^a)^(-e_a) truncated at cap (rational e_a allowed).
QSeries product_from_exponents(const std::vector<ProductExponent>& exps, const Rational& cap);

/// log f for f with constant term 1; exp g for g with positive order.
QSeries series_log1(const QSeries& f);
QSeries series_exp(const QSeries& g);

/// Textual form "w * (m1, m2; q^n)^r * ..." with "+" between terms.
std::string render_product(const ProductExpr& expr);
ProductExpr parse_product(const std::string& text);

} // namespace qrsid
