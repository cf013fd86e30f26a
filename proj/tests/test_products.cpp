#include <doctest.h>

#include "qrsid/partitions.hpp"
#include "qrsid/products.hpp"
#include "test_helpers.hpp"

using namespace qrsid;

TEST_CASE("finite Pochhammer basics") {
    CHECK(poch_finite(Monomial::q(rat(1)), rat(1), 2, rat(10)) ==
          parse_series("1 - q - q^2 + q^3"));
    auto g = testing::rng();
    CHECK(poch_finite(testing::random_pos_monomial(g), rat(1), 0, rat(5)) ==
          QSeries::one(rat(5)));
    CHECK(poch_finite(Monomial(-Scalar::one(), rat(0)), rat(1), 1, rat(5)) ==
          QSeries::constant(Scalar(2), rat(5)));
}

TEST_CASE("infinite Pochhammer follows the pentagonal pattern") {
    // Euler's pentagonal series: exponents j(3j-1)/2 with signs (-1)^j.
    QSeries expect(1, rat(7));
    for (long j = -3; j <= 3; ++j) {
        long e = j * (3 * j - 1) / 2;
        if (e <= 7) expect.add_term(e, j % 2 == 0 ? Scalar::one() : -Scalar::one());
    }
    CHECK(poch_inf(Monomial::q(rat(1)), rat(1), rat(7)) == expect);
    CHECK(expect == parse_series("1 - q - q^2 + q^5 + q^7"));
}

TEST_CASE("infinite Pochhammer with constant base") {
    CHECK(poch_inf(Monomial(-Scalar::one(), rat(0)), rat(1), rat(3)) ==
          parse_series("2 + 2*q + 2*q^2 + 4*q^3"));
}

TEST_CASE("divergent products are rejected") {
    try {
        poch_inf(Monomial(Scalar::one(), rat(-1)), rat(1), rat(5));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivergentProduct);
    }
    CHECK_THROWS_AS(poch_inf(Monomial::one(), rat(1), rat(5)), Error);
}

TEST_CASE("product expression evaluation matches the partition oracle") {
    ProductExpr rr = parse_product("(q, q^4; q^5)^-1");
    QSeries lhs = product_expr_eval(rr, {}, rat(6));
    CHECK(lhs == parse_series("1 + q + q^2 + q^3 + 2*q^4 + 2*q^5 + 3*q^6"));
    CHECK(lhs == product_partition_expand({{1, 5}, {4, 5}}, 6));
}

TEST_CASE("cancelling factors") {
    ProductExpr e = parse_product("(q; q) * (q; q)^-1");
    CHECK(product_expr_eval(e, {}, rat(8)) == QSeries::one(rat(8)));
}

TEST_CASE("two-term right side collapses at u = 1") {
    // (u^-1 q^2, u q^3, q^5; q^5) + (u q^2, u^-1 q^3, q^5; q^5), all over (q;q).
    ProductExpr two = parse_product(
        "(u^-1*q^2, u*q^3, q^5; q^5) * (q; q)^-1 + (u*q^2, u^-1*q^3, q^5; q^5) * (q; q)^-1");
    ProductExpr doubled = parse_product("2 * (q^2, q^3, q^5; q^5) * (q; q)^-1");
    ParamAssignment at_one{{"u", Monomial::one()}};
    CHECK(product_expr_eval(two, at_one, rat(12)) == product_expr_eval(doubled, {}, rat(12)));
}

TEST_CASE("Euler q-exponential identities on random monomials") {
    auto g = testing::rng(31);
    Rational cap(10);
    for (int t = 0; t < 20; ++t) {
        Monomial z = testing::random_pos_monomial(g);
        QSeries sum1 = QSeries::zero(cap), sum2 = QSeries::zero(cap);
        QSeries poch_n = QSeries::one(cap);
        for (long n = 0; z.qexp * n <= cap; ++n) {
            if (n > 0) poch_n = poch_n.div_binomial(Scalar::one(), rat(n));
            QSeries zn = poch_n.shifted(z.coeff.pow(n), z.qexp * n).restricted(cap);
            sum1 = sum1 + zn;
            sum2 = sum2 + zn.shifted(Scalar::one(), rat(n * (n - 1), 2)).restricted(cap);
        }
        CHECK(sum1 == poch_inf(z, rat(1), cap).invert());
        CHECK(sum2 == poch_inf(-z, rat(1), cap));
    }
}

TEST_CASE("q-binomial theorem on random monomials") {
    auto g = testing::rng(37);
    Rational cap(10);
    for (int t = 0; t < 20; ++t) {
        Monomial a = testing::random_pos_monomial(g);
        Monomial z = testing::random_pos_monomial(g);
        QSeries sum = QSeries::zero(cap);
        QSeries ratio = QSeries::one(cap); // (a;q)_n / (q;q)_n
        for (long n = 0; z.qexp * n <= cap; ++n) {
            if (n > 0) {
                ratio = ratio.times_binomial(a.coeff, a.qexp + (n - 1));
                ratio = ratio.div_binomial(Scalar::one(), rat(n));
            }
            sum = sum + ratio.shifted(z.coeff.pow(n), z.qexp * n).restricted(cap);
        }
        QSeries rhs = poch_inf(a * z, rat(1), cap) * poch_inf(z, rat(1), cap).invert();
        CHECK(sum == rhs);
    }
}

TEST_CASE("prodmake recovers defining products") {
    QSeries f = poch_inf(Monomial::q(rat(1)), rat(1), rat(10)).invert();
    auto exps = prodmake(f, rat(10));
    REQUIRE(exps.size() == 10);
    for (long a = 1; a <= 10; ++a) {
        CHECK(exps[a - 1].a == rat(a));
        CHECK(exps[a - 1].e == rat(1));
    }
}

TEST_CASE("prodmake finds period-6 residues") {
    ProductExpr p = parse_product("(q^2, q^3; q^6)^-1");
    QSeries f = product_expr_eval(p, {}, rat(12));
    auto exps = prodmake(f, rat(12));
    std::vector<long> where;
    for (const auto& pe : exps) {
        CHECK(pe.e == rat(1));
        where.push_back(to_long(pe.a));
    }
    CHECK(where == std::vector<long>{2, 3, 8, 9});
}

TEST_CASE("prodmake of 1 + q") {
    // 1 + q = (1-q^2)/(1-q), i.e. e_1 = 1, e_2 = -1 in prod (1-q^a)^(-e_a).
    auto exps = prodmake(parse_series("1 + q").restricted(rat(8)), rat(8));
    REQUIRE(exps.size() >= 2);
    CHECK(exps[0].a == rat(1));
    CHECK(exps[0].e == rat(1));
    CHECK(exps[1].a == rat(2));
    CHECK(exps[1].e == rat(-1));
    QSeries back = product_from_exponents(exps, rat(8));
    CHECK(back == parse_series("1 + q").restricted(rat(8)));
}

TEST_CASE("prodmake requires rational coefficients") {
    QSeries f(1, rat(6));
    f.add_term(0, Scalar::one());
    f.add_term(1, Scalar::i_unit());
    try {
        prodmake(f, rat(6));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonRationalExponent);
    }
}

TEST_CASE("prodmake round-trips random Pochhammer quotients") {
    auto g = testing::rng(41);
    Rational cap(14);
    for (int t = 0; t < 12; ++t) {
        ProductTerm term;
        int nf = 1 + static_cast<int>(g() % 3);
        for (int k = 0; k < nf; ++k) {
            long a = 1 + static_cast<long>(g() % 5);
            long m = 1 + static_cast<long>(g() % 4);
            term.factors.push_back(
                {Scalar::one(), rat(a), {}, rat(m), (g() % 2) ? 1 : -1});
        }
        ProductExpr expr{{term}};
        QSeries f = product_expr_eval(expr, {}, cap);
        QSeries back = product_from_exponents(prodmake(f, cap), cap);
        CHECK(back == f);
    }
}

TEST_CASE("fractional grids rescale through prodmake") {
    ProductExpr p = parse_product("(q^(1/2); q)^-2");
    QSeries f = product_expr_eval(p, {}, rat(5));
    auto exps = prodmake(f, rat(5));
    CHECK(product_from_exponents(exps, rat(5)) == f);
    CHECK(exps[0].a == rat(1, 2));
    CHECK(exps[0].e == rat(2));
}

TEST_CASE("product text round-trip") {
    auto check_rt = [](const std::string& text) {
        ProductExpr p = parse_product(text);
        CHECK(render_product(p) == text);
        CHECK(parse_product(render_product(p)) == p);
    };
    check_rt("(q, q^4; q^5)^-1");
    check_rt("2 * (q^2, q^3, q^5; q^5) * (q; q)^-1");
    check_rt("(u; q^2)");
    check_rt("(-q, b*q^2*c^-1; q) * (b*q, b^-1*c; q^2) * (b^2*q^2*c^-1; q^2)^-1");
    check_rt("-q^-1 * (q^8, q^10, q^9; q^9) * (q; q)^-1");
    check_rt("(q^(1/2); q)^-2 + (-1*q^(3/2), i; q^3)");
}
