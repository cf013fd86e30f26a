#include "qrsid/partitions.hpp"

namespace qrsid {

namespace {

// Partitions of n into exactly u distinct parts, each < limit.
std::int64_t distinct_below(int u, int n, int limit) {
    if (u == 0) return n == 0 ? 1 : 0;
    std::int64_t total = 0;
    // Smallest possible sum of u distinct parts topped by p is p + (p-1) + ...
    for (int p = 1; p < limit && p <= n; ++p) {
        if (static_cast<std::int64_t>(p) * u - static_cast<std::int64_t>(u) * (u - 1) / 2 > n)
            break;
        total += distinct_below(u - 1, n - p, p);
    }
    return total;
}

enum Color { A = 0, B = 1, AB = 2 };

const int kMinDiff[3][3] = {
    {1, 2, 1}, // larger part colored a
    {1, 1, 1}, // larger part colored b
    {2, 2, 2}, // larger part colored ab
};

// Extends a colored partition downward: previous (larger) part prev with
// color pc, remaining sum n, remaining color budgets u (a/ab) and v (b/ab).
std::int64_t count_s_rec(int n, int u, int v, int prev, int pc, bool have_prev) {
    if (n == 0) return (u == 0 && v == 0) ? 1 : 0;
    if (u < 0 || v < 0) return 0;
    std::int64_t total = 0;
    int hi = have_prev ? prev : n;
    for (int val = 1; val <= hi && val <= n; ++val) {
        for (int col = 0; col < 3; ++col) {
            if (val == 1 && col == AB) continue; // no part 1_ab
            if (have_prev && prev - val < kMinDiff[pc][col]) continue;
            int du = (col == A || col == AB) ? 1 : 0;
            int dv = (col == B || col == AB) ? 1 : 0;
            total += count_s_rec(n - val, u - du, v - dv, val, col, true);
        }
    }
    return total;
}

} // namespace

std::int64_t count_distinct_parts(int u, int n) {
    if (u < 0 || n < 0) return 0;
    return distinct_below(u, n, n + 1);
}

std::int64_t count_T(int u, int v, int n) {
    if (u < 0 || v < 0 || n < 0) return 0;
    std::int64_t total = 0;
    for (int m = 0; m <= n; ++m) {
        std::int64_t left = count_distinct_parts(u, m);
        if (left == 0) continue;
        total += left * count_distinct_parts(v, n - m);
    }
    return total;
}

std::int64_t count_S(int u, int v, int n) {
    if (u < 0 || v < 0 || n < 0) return 0;
    return count_s_rec(n, u, v, 0, 0, false);
}

QSeries product_partition_expand(const std::vector<ResidueClass>& classes, long cap) {
    std::vector<std::int64_t> dp(static_cast<size_t>(cap) + 1, 0);
    dp[0] = 1;
    // Each allowed part value is its own unbounded type; classes that repeat
    // a value genuinely contribute an extra factor.
    for (const auto& cls : classes) {
        if (cls.residue <= 0 || cls.modulus <= 0)
            raise(ErrorKind::Internal, "residue classes must be positive");
        for (long part = cls.residue; part <= cap; part += cls.modulus) {
            for (long x = part; x <= cap; ++x)
                dp[static_cast<size_t>(x)] += dp[static_cast<size_t>(x - part)];
        }
    }
    QSeries out(1, rat(cap));
    for (long x = 0; x <= cap; ++x)
        if (dp[static_cast<size_t>(x)] != 0)
            out.set_term(x, Scalar(rat(dp[static_cast<size_t>(x)])));
    return out;
}

} // namespace qrsid
