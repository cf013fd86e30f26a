#pragma once

#include <optional>
#include <string>

#include "qrsid/qseries.hpp"

namespace qrsid {

/// c * q^e with an exact Scalar coefficient. The zero monomial (c == 0) is
/// allowed and swallows the exponent. Parameters of identities are assigned
/// monomial values.
struct Monomial {
    Scalar coeff = Scalar::one();
    Rational qexp = Rational(0);

    Monomial() = default;
    Monomial(Scalar c, Rational e) : coeff(std::move(c)), qexp(std::move(e)) {
        if (coeff.is_zero()) qexp = 0;
    }

    static Monomial zero() { return Monomial(Scalar::zero(), Rational(0)); }
    static Monomial one() { return Monomial(Scalar::one(), Rational(0)); }
    static Monomial q(const Rational& e) { return Monomial(Scalar::one(), e); }

    bool is_zero() const { return coeff.is_zero(); }
    bool is_one() const { return coeff.is_one() && sgn(qexp) == 0; }

    Monomial operator*(const Monomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        return Monomial(coeff * o.coeff, qexp + o.qexp);
    }
    Monomial operator-() const { return Monomial(-coeff, qexp); }
    bool operator==(const Monomial& o) const { return coeff == o.coeff && qexp == o.qexp; }

    /// Integer power; DivisionByZero on negative powers of the zero monomial.
    Monomial pow(long e) const {
        if (e == 0) return one();
        if (is_zero()) {
            if (e < 0) raise(ErrorKind::DivisionByZero, "negative power of zero monomial");
            return zero();
        }
        return Monomial(coeff.pow(e), qexp * rat(e));
    }

    /// Square root within the ring, when coeff has one and qexp/2 fits a grid.
    std::optional<Monomial> sqrt() const {
        auto c = coeff.sqrt_in_field();
        if (!c) return std::nullopt;
        return Monomial(*c, qexp / 2);
    }

    QSeries as_series(const Rational& cap) const { return QSeries::monomial(coeff, qexp, cap); }

    /// Canonical text "c*q^(p/d)" (coefficient and q parts omitted when
    /// trivial); parse_monomial inverts it.
    std::string str() const;
};

Monomial parse_monomial(const std::string& text);

} // namespace qrsid
