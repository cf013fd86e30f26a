#pragma once

#include "qrsid/sums.hpp"

namespace qrsid {

/// Reference evaluator for sum sides: walks the fixed box [0, B]^k directly,
/// computing each term from finite Pochhammers, with none of the layer or
/// tail machinery of sum_side_eval. Verifies on the outer shell that every
/// omitted point already exceeds the cap (growing B up to max_box if not).
/// Intentionally slow; used as an oracle at small caps.
QSeries naive_sum_eval(const SumSideSpec& spec, const ParamAssignment& assign,
                       const Rational& cap, long box = 24, long max_box = 160);

} // namespace qrsid
