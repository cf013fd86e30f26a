#include <doctest.h>

#include "qrsid/scalar.hpp"
#include "test_helpers.hpp"

using namespace qrsid;

TEST_CASE("imaginary unit squares to -1") {
    Scalar i = Scalar::i_unit();
    CHECK(i * i == -Scalar::one());
    CHECK(i == Scalar::zeta12().pow(3));
}

TEST_CASE("zeta3 is a primitive cube root") {
    Scalar z3 = Scalar::zeta3();
    CHECK(z3 * (z3 * z3) == Scalar::one());
    CHECK(z3 != Scalar::one());
    CHECK(z3 * z3 != Scalar::one());
    CHECK(z3 + z3.conj() == -Scalar::one());
    CHECK(z3.conj() == z3 * z3);
}

TEST_CASE("zeta12 has multiplicative order exactly 12") {
    Scalar z = Scalar::zeta12();
    Scalar acc = Scalar::one();
    for (int k = 1; k <= 11; ++k) {
        acc = acc * z;
        CHECK(acc != Scalar::one());
    }
    CHECK(acc * z == Scalar::one());
    CHECK(Scalar::zeta12().pow(6) == -Scalar::one());
}

TEST_CASE("unit_power table and periodicity") {
    CHECK(unit_power(0) == Scalar::one());
    CHECK(unit_power(1) == Scalar::i_unit());
    CHECK(unit_power(2) == -Scalar::one());
    CHECK(unit_power(3) == -Scalar::i_unit());
    CHECK(unit_power(-1) == -Scalar::i_unit());
    CHECK(unit_power(6) == -Scalar::one());
    auto g = testing::rng();
    for (int t = 0; t < 50; ++t) {
        long n = static_cast<long>(g() % 4001) - 2000;
        CHECK(unit_power(n) == unit_power(((n % 4) + 4) % 4));
    }
}

TEST_CASE("field axioms on random samples") {
    auto g = testing::rng(7);
    for (int t = 0; t < 40; ++t) {
        Scalar a = testing::random_scalar(g);
        Scalar b = testing::random_scalar(g);
        Scalar c = testing::random_scalar(g);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a / a == Scalar::one());
            CHECK(a * a.inverse() == Scalar::one());
        }
    }
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), Error);
    try {
        Scalar::zero().inverse();
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("rationals normalize to lowest terms") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(-3, -6) == Scalar(1, 2));
    CHECK(rat_str(Scalar(5, -10).rational_value()) == "-1/2");
}

TEST_CASE("conjugation is a ring automorphism") {
    auto g = testing::rng(11);
    CHECK(Scalar::i_unit().conj() == -Scalar::i_unit());
    for (int t = 0; t < 25; ++t) {
        Scalar a = testing::random_scalar(g);
        Scalar b = testing::random_scalar(g);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("square roots inside the field") {
    CHECK(*(-Scalar::one()).sqrt_in_field() == Scalar::i_unit());
    CHECK(*Scalar(4, 9).sqrt_in_field() == Scalar(2, 3));
    CHECK(*Scalar::zeta3().sqrt_in_field() == Scalar::zeta6());
    CHECK(!Scalar(2).sqrt_in_field());
    CHECK(!Scalar::i_unit().sqrt_in_field());
    auto r = Scalar(-9, 4).sqrt_in_field();
    REQUIRE(r);
    CHECK(*r * *r == Scalar(-9, 4));
}

TEST_CASE("text round-trip") {
    CHECK(Scalar::i_unit().str() == "i");
    CHECK((-Scalar::i_unit()).str() == "-i");
    CHECK(parse_scalar("z3") == Scalar::zeta3());
    CHECK(parse_scalar("-1") == -Scalar::one());
    CHECK(parse_scalar("2/3") == Scalar(2, 3));
    auto g = testing::rng(13);
    for (int t = 0; t < 60; ++t) {
        Scalar a = testing::random_scalar(g);
        CHECK(parse_scalar(a.str()) == a);
    }
}
