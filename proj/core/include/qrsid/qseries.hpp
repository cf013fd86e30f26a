#pragma once

#include <map>
#include <optional>
#include <string>

#include "qrsid/scalar.hpp"

namespace qrsid {

/// Maximum supported grid denominator for exponents q^(k/d).
inline constexpr int kMaxGridDen = 24;

struct IntegralityReport {
    bool is_integer_grid = true;
    std::optional<Rational> first_fractional;
};

/// Truncated Puiseux series in q over Scalar: finitely many terms c * q^(k/d)
/// with k/d <= order_cap. Terms above the cap are unknown, not zero; the cap
/// is tracked explicitly and propagates pessimistically through arithmetic.
///
/// Invariants: stored keys k satisfy k/d <= order_cap, coefficients are
/// nonzero, and d is in [1, kMaxGridDen]. Values are immutable; operations
/// return new series. Exponents may be negative.
class QSeries {
public:
    using Map = std::map<long long, Scalar>;

    QSeries() : grid_den_(1), cap_(0) {}
    QSeries(int grid_den, Rational cap) : grid_den_(grid_den), cap_(std::move(cap)) {
        check_grid(grid_den_);
    }

    static QSeries zero(const Rational& cap, int grid_den = 1) { return QSeries(grid_den, cap); }
    static QSeries constant(const Scalar& c, const Rational& cap);
    static QSeries one(const Rational& cap) { return constant(Scalar::one(), cap); }
    /// c * q^e truncated at cap (empty series when e > cap).
    static QSeries monomial(const Scalar& c, const Rational& e, const Rational& cap);

    int grid_den() const { return grid_den_; }
    const Rational& order_cap() const { return cap_; }
    const Map& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }

    /// Exponent of a stored key.
    Rational exponent_of(long long key) const { return rat(key, grid_den_); }
    /// Least exponent with nonzero coefficient; nullopt for the zero series.
    std::optional<Rational> min_exponent() const;

    QSeries operator-() const;
    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    bool operator==(const QSeries& o) const;
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    QSeries scaled(const Scalar& c) const;
    /// Multiplication by the exact monomial c*q^e; the cap advances by e.
    QSeries shifted(const Scalar& c, const Rational& e) const;
    /// Lowers the cap to new_cap and drops terms above it.
    QSeries restricted(const Rational& new_cap) const;
    /// Efficient f * (1 - c q^e).
    QSeries times_binomial(const Scalar& c, const Rational& e) const;
    /// Efficient f / (1 - c q^e); requires e > 0, or e == 0 with c != 1.
    QSeries div_binomial(const Scalar& c, const Rational& e) const;

    /// Multiplicative inverse; NonUnitLeadingTerm unless the least stored
    /// exponent is 0 (nonzero constant term, nothing below it).
    QSeries invert() const;
    /// q -> q^m on every exponent; m > 0. GridOverflow if the new grid
    /// denominator would exceed kMaxGridDen.
    QSeries rescale(const Rational& m) const;
    /// Coefficient of q^e; zero when absent or off-grid. BeyondCap if e > cap.
    Scalar coeff(const Rational& e) const;
    IntegralityReport integrality_report() const;

    /// First exponent where the two series differ (compared up to the lesser
    /// cap); nullopt when equal.
    static std::optional<Rational> first_difference(const QSeries& a, const QSeries& b);

    /// Canonical text, terms ascending: "1 - q + 2*q^3 + q^(7/2)".
    /// parse_series inverts it exactly.
    std::string str() const;

    /// Builder access used by the engine; key is on this series' grid.
    void add_term(long long key, const Scalar& c);
    void set_term(long long key, Scalar c);

    /// Returns copies re-expressed on a common grid (lcm of the two).
    static std::pair<QSeries, QSeries> aligned(const QSeries& a, const QSeries& b);
    QSeries with_grid(int new_grid) const;

private:
    static void check_grid(int d);
    long long cap_key_floor() const;

    int grid_den_;
    Rational cap_;
    Map coeffs_;
};

QSeries parse_series(const std::string& text);

} // namespace qrsid
