#include <doctest.h>

#include "qrsid/qseries.hpp"
#include "test_helpers.hpp"

using namespace qrsid;

namespace {

QSeries geometric(const Rational& cap) {
    QSeries f(1, cap);
    for (long k = 0; k <= rat_floor(cap); ++k) f.add_term(k, Scalar::one());
    return f;
}

} // namespace

TEST_CASE("geometric series telescopes") {
    QSeries one_minus_q = parse_series("1 - q").restricted(rat(5));
    CHECK(one_minus_q * geometric(rat(5)) == QSeries::one(rat(5)));
}

TEST_CASE("binomial product by hand") {
    QSeries f = parse_series("1 - q").restricted(rat(10));
    QSeries g = parse_series("1 - q^2").restricted(rat(10));
    CHECK((f * g) == parse_series("1 - q - q^2 + q^3"));
    CHECK((f * g).coeff(rat(2)) == -Scalar::one());
}

TEST_CASE("additive inverse") {
    auto g = testing::rng(3);
    for (int t = 0; t < 20; ++t) {
        QSeries f = testing::random_series(g, rat(8), 2);
        CHECK((f + (-f)).is_zero());
    }
}

TEST_CASE("inversion") {
    QSeries f = parse_series("1 - q").restricted(rat(3));
    CHECK(f.invert() == parse_series("1 + q + q^2 + q^3"));
    CHECK(QSeries::constant(Scalar(2), rat(4)).invert() == QSeries::constant(Scalar(1, 2), rat(4)));
    auto g = testing::rng(5);
    for (int t = 0; t < 15; ++t) {
        QSeries f2 = testing::random_series(g, rat(7), 2, /*unit_constant=*/true);
        CHECK(f2 * f2.invert() == QSeries::one(rat(7)));
    }
}

TEST_CASE("inversion needs a unit constant term") {
    try {
        parse_series("q + q^2").restricted(rat(5)).invert();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonUnitLeadingTerm);
    }
    CHECK_THROWS_AS(QSeries::zero(rat(4)).invert(), Error);
    // A negative leading exponent has no constant-term inverse either.
    QSeries laur(1, rat(4));
    laur.add_term(-1, Scalar::one());
    laur.add_term(0, Scalar::one());
    CHECK_THROWS_AS(laur.invert(), Error);
}

TEST_CASE("rescale") {
    CHECK(parse_series("1 - q").rescale(rat(2)) == parse_series("1 - q^2"));
    CHECK(parse_series("1 - q^(1/2)").rescale(rat(2)) == parse_series("1 - q"));
    auto g = testing::rng(9);
    for (int t = 0; t < 15; ++t) {
        QSeries f = testing::random_series(g, rat(6), 2);
        CHECK(f.rescale(rat(2)).rescale(rat(1, 2)) == f);
    }
    try {
        parse_series("1 - q").rescale(rat(1, 25));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::GridOverflow);
    }
}

TEST_CASE("coefficient queries") {
    QSeries f = parse_series("1 - q - q^2 + q^3");
    CHECK(f.coeff(rat(2)) == -Scalar::one());
    CHECK(f.coeff(rat(1, 2)) == Scalar::zero()); // off the grid
    try {
        f.coeff(rat(4));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BeyondCap);
    }
}

TEST_CASE("integrality report") {
    auto r1 = parse_series("1 + q^2").integrality_report();
    CHECK(r1.is_integer_grid);
    CHECK(!r1.first_fractional);
    auto r2 = parse_series("1 + q^(1/2)").integrality_report();
    CHECK(!r2.is_integer_grid);
    CHECK(*r2.first_fractional == rat(1, 2));
}

TEST_CASE("ring axioms up to shared cap") {
    auto g = testing::rng(17);
    for (int t = 0; t < 12; ++t) {
        QSeries a = testing::random_series(g, rat(6), 2);
        QSeries b = testing::random_series(g, rat(6), 2);
        QSeries c = testing::random_series(g, rat(6), 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("truncation consistency") {
    auto g = testing::rng(21);
    for (int t = 0; t < 12; ++t) {
        QSeries a = testing::random_series(g, rat(9));
        QSeries b = testing::random_series(g, rat(9));
        Rational m = rat(4);
        CHECK((a * b).restricted(m) == a.restricted(m) * b.restricted(m));
        CHECK((a + b).restricted(m) == a.restricted(m) + b.restricted(m));
        QSeries u = testing::random_series(g, rat(9), 1, /*unit_constant=*/true);
        CHECK(u.invert().restricted(m) == u.restricted(m).invert());
    }
}

TEST_CASE("multiplication matches the naive convolution") {
    auto g = testing::rng(23);
    for (int t = 0; t < 10; ++t) {
        QSeries a = testing::random_series(g, rat(6));
        QSeries b = testing::random_series(g, rat(6));
        QSeries prod = a * b;
        for (long e = 0; e <= 6; ++e) {
            Scalar want;
            for (const auto& [ka, ca] : a.terms())
                for (const auto& [kb, cb] : b.terms())
                    if (ka + kb == e) want += ca * cb;
            CHECK(prod.coeff(rat(e)) == want);
        }
    }
}

TEST_CASE("negative exponents are first-class") {
    QSeries f(1, rat(3));
    f.add_term(-1, -Scalar::one());
    f.add_term(0, Scalar::one());
    QSeries g = f * f;
    CHECK(g.coeff(rat(-2)) == Scalar::one());
    CHECK(g.coeff(rat(-1)) == Scalar(-2));
    CHECK(*f.min_exponent() == rat(-1));
}

TEST_CASE("canonical text round-trip") {
    CHECK(parse_series("1 + q + q^2").str() == "1 + q + q^2");
    CHECK(parse_series("1 - 2*q^(1/2) + q^(7/2)").str() == "1 - 2*q^(1/2) + q^(7/2)");
    auto g = testing::rng(29);
    for (int t = 0; t < 30; ++t) {
        QSeries f = testing::random_series(g, rat(7), 2);
        if (f.is_zero()) continue;
        CHECK(parse_series(f.str()) == f);
    }
}
