#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "qrsid/rational.hpp"

namespace qrsid {

/// Element of the cyclotomic field Q(z) where z is a primitive 12th root of
/// unity with minimal polynomial z^4 - z^2 + 1. Stored as
///   c0 + c1*z + c2*z^2 + c3*z^3
/// with exact rational coordinates. Equality is coordinate-wise. Values are
/// immutable in spirit: all operations return fresh scalars.
///
/// Embedded roots of unity:
///   z2 = -1, z3 = z^2 - 1, z4 = i = z^3 - z, z6 = z^2, z12 = z.
class Scalar {
public:
    Scalar() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
    explicit Scalar(const Rational& r) : c_{r, Rational(0), Rational(0), Rational(0)} {}
    Scalar(long num, long den) : Scalar(rat(num, den)) {}
    explicit Scalar(long n) : Scalar(rat(n)) {}
    Scalar(Rational a, Rational b, Rational c, Rational d)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar zeta12();            // z
    static Scalar i_unit();            // z^3 - z
    static Scalar zeta3();             // z^2 - 1
    static Scalar zeta6();             // z^2
    /// z12^k for any integer k.
    static Scalar root_of_unity(long k);

    const Rational& coord(int k) const { return c_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// The rational value; requires is_rational().
    const Rational& rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Exact field division; DivisionByZero when o == 0.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return c_ == o.c_; }
    bool operator!=(const Scalar& o) const { return c_ != o.c_; }

    Scalar inverse() const;
    /// Complex conjugate (z -> z^-1), an automorphism of the field.
    Scalar conj() const;
    /// Integer power; 0^0 = 1, negative powers of 0 raise DivisionByZero.
    Scalar pow(long e) const;
    /// Square root when one exists in the field: the value must factor as
    /// r * z12^k with r a rational square and k even. Returns nullopt otherwise.
    std::optional<Scalar> sqrt_in_field() const;

    /// Writes the decomposition r * z12^k when the scalar is a rational
    /// multiple of a root of unity (r > 0); nullopt otherwise.
    std::optional<std::pair<Rational, int>> as_rational_times_root() const;

    /// Canonical text: rational scalars as "p/q"; +-i as "i"/"-i"; otherwise
    /// a signed sum of "c*z12^k" terms. parse_scalar inverts this exactly.
    std::string str() const;

private:
    std::array<Rational, 4> c_;
};

/// i^n with period 4: 1, i, -1, -i.
Scalar unit_power(long n);

/// Parses the output of Scalar::str() plus the aliases z2, z3, z4, z6, z12.
Scalar parse_scalar(const std::string& text);

} // namespace qrsid
