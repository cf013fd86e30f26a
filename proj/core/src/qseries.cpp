#include "qrsid/qseries.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace qrsid {

void QSeries::check_grid(int d) {
    if (d < 1 || d > kMaxGridDen)
        raise(ErrorKind::GridOverflow,
              "grid denominator " + std::to_string(d) + " outside [1, " +
                  std::to_string(kMaxGridDen) + "]");
}

long long QSeries::cap_key_floor() const {
    Rational scaled = cap_ * grid_den_;
    return rat_floor(scaled);
}

QSeries QSeries::constant(const Scalar& c, const Rational& cap) {
    QSeries f(1, cap);
    if (!c.is_zero() && sgn(cap) >= 0) f.coeffs_[0] = c;
    return f;
}

QSeries QSeries::monomial(const Scalar& c, const Rational& e, const Rational& cap) {
    Rational red = e;
    red.canonicalize();
    long den = red.get_den().get_si();
    QSeries f(static_cast<int>(den), cap);
    if (!c.is_zero() && e <= cap) {
        if (!red.get_num().fits_slong_p()) raise(ErrorKind::Internal, "exponent out of range");
        f.coeffs_[red.get_num().get_si()] = c;
    }
    return f;
}

std::optional<Rational> QSeries::min_exponent() const {
    if (coeffs_.empty()) return std::nullopt;
    return exponent_of(coeffs_.begin()->first);
}

void QSeries::add_term(long long key, const Scalar& c) {
    if (c.is_zero()) return;
    if (rat(key, grid_den_) > cap_) return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void QSeries::set_term(long long key, Scalar c) {
    if (c.is_zero()) {
        coeffs_.erase(key);
        return;
    }
    if (rat(key, grid_den_) > cap_) return;
    coeffs_[key] = std::move(c);
}

QSeries QSeries::with_grid(int new_grid) const {
    check_grid(new_grid);
    if (new_grid == grid_den_) return *this;
    if (new_grid % grid_den_ != 0)
        raise(ErrorKind::GridOverflow, "cannot coarsen grid " + std::to_string(grid_den_) +
                                           " to " + std::to_string(new_grid));
    long long f = new_grid / grid_den_;
    QSeries out(new_grid, cap_);
    for (const auto& [k, c] : coeffs_) out.coeffs_[k * f] = c;
    return out;
}

std::pair<QSeries, QSeries> QSeries::aligned(const QSeries& a, const QSeries& b) {
    int g = std::lcm(a.grid_den_, b.grid_den_);
    check_grid(g);
    return {a.with_grid(g), b.with_grid(g)};
}

QSeries QSeries::operator-() const {
    QSeries out(grid_den_, cap_);
    for (const auto& [k, c] : coeffs_) out.coeffs_[k] = -c;
    return out;
}

QSeries QSeries::operator+(const QSeries& o) const {
    auto [a, b] = aligned(*this, o);
    QSeries out(a.grid_den_, std::min(a.cap_, b.cap_));
    long long capk = out.cap_key_floor();
    for (const auto& [k, c] : a.coeffs_)
        if (k <= capk) out.coeffs_[k] = c;
    for (const auto& [k, c] : b.coeffs_) {
        if (k > capk) continue;
        out.add_term(k, c);
    }
    return out;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
    auto [a, b] = aligned(*this, o);
    QSeries out(a.grid_den_, std::min(a.cap_, b.cap_));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return out;
    long long capk = out.cap_key_floor();
    long long off = a.coeffs_.begin()->first + b.coeffs_.begin()->first;
    if (off > capk) return out;
    // Dense accumulator over the reachable key window; entries are looked up
    // sparsely so only genuine products are formed.
    std::vector<Scalar> acc(static_cast<size_t>(capk - off) + 1);
    const auto& small = a.coeffs_.size() <= b.coeffs_.size() ? a.coeffs_ : b.coeffs_;
    const auto& big = a.coeffs_.size() <= b.coeffs_.size() ? b.coeffs_ : a.coeffs_;
    for (const auto& [ka, ca] : small) {
        for (const auto& [kb, cb] : big) {
            long long k = ka + kb;
            if (k > capk) break;
            acc[static_cast<size_t>(k - off)] += ca * cb;
        }
    }
    for (size_t idx = 0; idx < acc.size(); ++idx)
        if (!acc[idx].is_zero()) out.coeffs_.emplace_hint(out.coeffs_.end(), off + static_cast<long long>(idx), std::move(acc[idx]));
    return out;
}

bool QSeries::operator==(const QSeries& o) const {
    auto [a, b] = aligned(*this, o);
    return a.coeffs_ == b.coeffs_;
}

QSeries QSeries::scaled(const Scalar& c) const {
    QSeries out(grid_den_, cap_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : coeffs_) {
        Scalar p = v * c;
        if (!p.is_zero()) out.coeffs_[k] = p;
    }
    return out;
}

QSeries QSeries::shifted(const Scalar& c, const Rational& e) const {
    Rational red = e;
    red.canonicalize();
    int g = std::lcm<long>(grid_den_, red.get_den().get_si());
    check_grid(g);
    QSeries base = with_grid(g);
    QSeries out(g, cap_ + e);
    if (c.is_zero()) return out;
    long long shift = to_long(red * g);
    for (const auto& [k, v] : base.coeffs_) {
        Scalar p = v * c;
        if (!p.is_zero()) out.coeffs_[k + shift] = p;
    }
    return out;
}

QSeries QSeries::restricted(const Rational& new_cap) const {
    if (new_cap >= cap_) {
        QSeries out = *this;
        return out;
    }
    QSeries out(grid_den_, new_cap);
    long long capk = out.cap_key_floor();
    for (const auto& [k, c] : coeffs_) {
        if (k > capk) break;
        out.coeffs_[k] = c;
    }
    return out;
}

QSeries QSeries::times_binomial(const Scalar& c, const Rational& e) const {
    return *this - shifted(c, e).restricted(cap_);
}

QSeries QSeries::div_binomial(const Scalar& c, const Rational& e) const {
    if (sgn(e) < 0) raise(ErrorKind::Internal, "div_binomial requires e >= 0");
    if (sgn(e) == 0) {
        Scalar unit = Scalar::one() - c;
        if (unit.is_zero())
            raise(ErrorKind::PoleInLowerParameter, "division by vanishing 1 - c");
        return scaled(unit.inverse());
    }
    Rational red = e;
    red.canonicalize();
    int g = std::lcm<long>(grid_den_, red.get_den().get_si());
    check_grid(g);
    QSeries f = with_grid(g);
    long long step = to_long(red * g);
    QSeries out(g, cap_);
    long long capk = out.cap_key_floor();
    if (f.coeffs_.empty()) return out;
    // g = f + c q^e g, solved forward from the lowest key.
    long long lo = f.coeffs_.begin()->first;
    std::vector<Scalar> buf(static_cast<size_t>(capk - lo) + 1);
    for (const auto& [k, v] : f.coeffs_)
        if (k <= capk) buf[static_cast<size_t>(k - lo)] = v;
    for (long long k = lo; k <= capk; ++k) {
        if (k - step >= lo) {
            const Scalar& prev = buf[static_cast<size_t>(k - step - lo)];
            if (!prev.is_zero()) buf[static_cast<size_t>(k - lo)] += c * prev;
        }
    }
    for (long long k = lo; k <= capk; ++k) {
        Scalar& v = buf[static_cast<size_t>(k - lo)];
        if (!v.is_zero()) out.coeffs_.emplace_hint(out.coeffs_.end(), k, std::move(v));
    }
    return out;
}

QSeries QSeries::invert() const {
    auto lead = min_exponent();
    if (!lead || sgn(*lead) != 0)
        raise(ErrorKind::NonUnitLeadingTerm,
              "inversion requires a nonzero constant term at exponent 0");
    long long capk = cap_key_floor();
    if (capk < 0) return QSeries(grid_den_, cap_);
    std::vector<Scalar> f(static_cast<size_t>(capk) + 1);
    for (const auto& [k, c] : coeffs_)
        if (k >= 0 && k <= capk) f[static_cast<size_t>(k)] = c;
    Scalar inv0 = f[0].inverse();
    std::vector<Scalar> g(static_cast<size_t>(capk) + 1);
    g[0] = inv0;
    for (long long m = 1; m <= capk; ++m) {
        Scalar acc;
        for (long long t = 1; t <= m; ++t) {
            const Scalar& ft = f[static_cast<size_t>(t)];
            if (ft.is_zero()) continue;
            const Scalar& gp = g[static_cast<size_t>(m - t)];
            if (gp.is_zero()) continue;
            acc += ft * gp;
        }
        if (!acc.is_zero()) g[static_cast<size_t>(m)] = -(inv0 * acc);
    }
    QSeries out(grid_den_, cap_);
    for (long long k = 0; k <= capk; ++k)
        if (!g[static_cast<size_t>(k)].is_zero())
            out.coeffs_.emplace_hint(out.coeffs_.end(), k, std::move(g[static_cast<size_t>(k)]));
    return out;
}

QSeries QSeries::rescale(const Rational& m) const {
    if (sgn(m) <= 0) raise(ErrorKind::Internal, "rescale requires m > 0");
    Rational step = m / grid_den_;
    step.canonicalize();
    if (!step.get_den().fits_slong_p())
        raise(ErrorKind::GridOverflow, "rescaled grid denominator too large");
    long new_den = step.get_den().get_si();
    if (new_den > kMaxGridDen)
        raise(ErrorKind::GridOverflow, "rescaled grid denominator " + std::to_string(new_den) +
                                           " exceeds " + std::to_string(kMaxGridDen));
    QSeries out(static_cast<int>(new_den), cap_ * m);
    if (!step.get_num().fits_slong_p()) raise(ErrorKind::GridOverflow, "rescale step too large");
    long long p = step.get_num().get_si();
    for (const auto& [k, c] : coeffs_) out.coeffs_[k * p] = c;
    return out;
}

Scalar QSeries::coeff(const Rational& e) const {
    if (e > cap_) raise(ErrorKind::BeyondCap, "coefficient query past the truncation cap");
    Rational key = e * grid_den_;
    key.canonicalize();
    if (!is_integer(key)) return Scalar::zero();
    auto it = coeffs_.find(to_long(key));
    return it == coeffs_.end() ? Scalar::zero() : it->second;
}

IntegralityReport QSeries::integrality_report() const {
    IntegralityReport rep;
    for (const auto& [k, c] : coeffs_) {
        if (k % grid_den_ != 0) {
            rep.is_integer_grid = false;
            rep.first_fractional = exponent_of(k);
            break;
        }
    }
    return rep;
}

std::optional<Rational> QSeries::first_difference(const QSeries& a, const QSeries& b) {
    auto [x, y] = aligned(a, b);
    Rational cap = std::min(x.order_cap(), y.order_cap());
    long long capk = rat_floor(cap * x.grid_den());
    auto ia = x.terms().begin(), ea = x.terms().end();
    auto ib = y.terms().begin(), eb = y.terms().end();
    while (ia != ea || ib != eb) {
        long long ka = ia != ea ? ia->first : capk + 1;
        long long kb = ib != eb ? ib->first : capk + 1;
        long long k = std::min(ka, kb);
        if (k > capk) break;
        Scalar ca = (ka == k) ? ia->second : Scalar::zero();
        Scalar cb = (kb == k) ? ib->second : Scalar::zero();
        if (ca != cb) return rat(k, x.grid_den());
        if (ka == k) ++ia;
        if (kb == k) ++ib;
    }
    return std::nullopt;
}

std::string QSeries::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        Rational e = exponent_of(k);
        bool neg = false;
        Scalar body = c;
        if (c.is_rational() && sgn(c.rational_value()) < 0) {
            neg = true;
            body = -c;
        }
        std::string coef = body.str();
        bool coef_needs_parens = coef.find(' ') != std::string::npos;
        std::string piece;
        if (sgn(e) == 0) {
            piece = coef_needs_parens ? "(" + coef + ")" : coef;
        } else {
            std::string qpart;
            if (e == 1) {
                qpart = "q";
            } else if (is_integer(e)) {
                qpart = "q^" + rat_str(e);
            } else {
                qpart = "q^(" + rat_str(e) + ")";
            }
            if (body.is_one()) {
                piece = qpart;
            } else if (coef_needs_parens) {
                piece = "(" + coef + ")*" + qpart;
            } else {
                piece = coef + "*" + qpart;
            }
        }
        if (first) {
            out << (neg ? "-" : "") << piece;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << piece;
        }
    }
    return out.str();
}

} // namespace qrsid
