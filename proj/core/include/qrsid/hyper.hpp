#pragma once

#include "qrsid/report.hpp"

namespace qrsid {

/// Basic hypergeometric series r_phi_s(a1..ar; b1..bs; q^base_step, z) with
/// monomial parameters in the global q.
struct PhiSpec {
    std::vector<Monomial> upper;
    std::vector<Monomial> lower;
    Rational base_step = Rational(1);
    Monomial argument;
};

/// Truncated expansion
///   sum_n (a1..;Q)_n / (Q, b1..;Q)_n ((-1)^n Q^C(n,2))^{1+s-r} z^n,  Q = q^step.
/// Termination requires argument q-order > 0, or 1+s-r > 0, or a vanishing
/// upper Pochhammer (upper parameter Q^-m); otherwise NonTerminating.
/// PoleInLowerParameter when a lower Pochhammer factor vanishes.
QSeries phi_eval(const PhiSpec& spec, const Rational& cap);

enum class SummationFormula { q_gauss, bailey_daum, q_dixon, heine };

const char* summation_formula_name(SummationFormula f);

/// Executable check of a classical summation/transformation on one monomial
/// assignment (names: a, b, c and z for heine). Inadmissible assignments come
/// back SKIP with the reason; evaluation errors likewise.
VerifyReport summation_check(SummationFormula which, const ParamAssignment& assign,
                             const Rational& cap);

} // namespace qrsid
