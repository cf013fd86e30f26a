#include <doctest.h>

#include "qrsid/partitions.hpp"
#include "qrsid/products.hpp"

using namespace qrsid;

TEST_CASE("bipartition counts") {
    CHECK(count_T(1, 0, 3) == 1);
    CHECK(count_T(0, 0, 0) == 1);
    CHECK(count_T(1, 1, 3) == 2);
    CHECK(count_T(0, 0, 1) == 0);
    CHECK(count_T(2, 0, 3) == 1); // 2+1
}

TEST_CASE("three-colored counts") {
    CHECK(count_S(0, 0, 0) == 1);
    CHECK(count_S(1, 0, 2) == 1);  // only 2_a
    CHECK(count_S(1, 1, 3) == 2);  // 3_ab and 2_b + 1_a
    CHECK(count_S(0, 1, 1) == 1);  // 1_b
    CHECK(count_S(1, 1, 1) == 0);  // 1_ab is forbidden
}

TEST_CASE("colored equals bipartition count to 12") {
    for (int n = 0; n <= 12; ++n)
        for (int u = 0; u <= 4; ++u)
            for (int v = 0; v <= 4; ++v) CHECK(count_S(u, v, n) == count_T(u, v, n));
}

TEST_CASE("partition expansion by residue classes") {
    CHECK(product_partition_expand({{1, 5}, {4, 5}}, 6) ==
          parse_series("1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6"));
    CHECK(product_partition_expand({}, 5) == QSeries::one(rat(5)));
    // Second Rogers-Ramanujan classes; the q^5 coefficient is 1 (only 2+3).
    CHECK(product_partition_expand({{2, 5}, {3, 5}}, 6) ==
          parse_series("1 + q^2 + q^3 + q^4 + q^5 + 2*q^6"));
    // A repeated class doubles the factor.
    CHECK(product_partition_expand({{1, 2}, {1, 2}}, 4) ==
          product_expr_eval(parse_product("(q; q^2)^-2"), {}, rat(4)));
}

TEST_CASE("distinct-part generating function") {
    // Partitions into exactly u distinct parts generate q^(u(u+1)/2)/(q;q)_u.
    Rational cap(12);
    for (int u = 0; u <= 4; ++u) {
        QSeries expect =
            poch_finite(Monomial::q(rat(1)), rat(1), u, cap).invert().shifted(
                Scalar::one(), rat(u * (u + 1), 2)).restricted(cap);
        QSeries got(1, cap);
        for (long n = 0; n <= 12; ++n)
            got.add_term(n, Scalar(rat(count_distinct_parts(u, static_cast<int>(n)))));
        CHECK(got == expect);
    }
}

TEST_CASE("graded bipartition generating function matches the double product") {
    // Coefficient of a^u b^v in (-aq,-bq;q)_inf is
    // q^(C(u+1,2))/(q;q)_u * q^(C(v+1,2))/(q;q)_v.
    Rational cap(12);
    for (int u = 0; u <= 3; ++u) {
        for (int v = 0; v <= 3; ++v) {
            QSeries fu = poch_finite(Monomial::q(rat(1)), rat(1), u, cap).invert().shifted(
                Scalar::one(), rat(u * (u + 1), 2));
            QSeries fv = poch_finite(Monomial::q(rat(1)), rat(1), v, cap).invert().shifted(
                Scalar::one(), rat(v * (v + 1), 2));
            QSeries expect = (fu.restricted(cap) * fv.restricted(cap)).restricted(cap);
            QSeries got(1, cap);
            for (long n = 0; n <= 12; ++n)
                got.add_term(n, Scalar(rat(count_T(u, v, static_cast<int>(n)))));
            CHECK(got == expect);
        }
    }
}
