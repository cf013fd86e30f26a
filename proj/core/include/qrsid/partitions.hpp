#pragma once

#include <cstdint>
#include <vector>

#include "qrsid/qseries.hpp"

namespace qrsid {

/// Number of bipartitions (pi1, pi2) of n where pi1 has exactly u distinct
/// parts and pi2 exactly v distinct parts. Exhaustive enumeration.
std::int64_t count_T(int u, int v, int n);

/// Number of three-colored partitions of n in the colors a, b, ab with no
/// part 1_ab, exactly u parts colored a or ab, exactly v parts colored b or
/// ab, and consecutive parts separated by at least
///     to:    a  b  ab
///   a        1  2  1
///   b        1  1  1
///   ab       2  2  2
/// (row = color of the larger part). Exhaustive enumeration.
std::int64_t count_S(int u, int v, int n);

/// One congruence class of allowed parts: a, a+n, a+2n, ...
struct ResidueClass {
    long residue;
    long modulus;
};

/// Partition-counting expansion of prod 1/(q^a; q^n)_inf by dynamic
/// programming over part values; integer grid, coefficients are counts.
QSeries product_partition_expand(const std::vector<ResidueClass>& classes, long cap);

/// Partitions of n into exactly u distinct positive parts (helper for the
/// graded generating-function checks).
std::int64_t count_distinct_parts(int u, int n);

} // namespace qrsid
