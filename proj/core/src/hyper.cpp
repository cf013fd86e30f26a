#include "qrsid/hyper.hpp"

#include <sstream>

namespace qrsid {

namespace {

// f / (1 - m) for a monomial m. Negative exponents use
// 1 - c q^e = -c q^e (1 - c^-1 q^-e).
QSeries div_one_minus(const QSeries& f, const Monomial& m) {
    if (m.is_zero()) return f;
    if (sgn(m.qexp) > 0) return f.div_binomial(m.coeff, m.qexp);
    if (sgn(m.qexp) == 0) {
        Scalar unit = Scalar::one() - m.coeff;
        if (unit.is_zero())
            raise(ErrorKind::PoleInLowerParameter, "lower Pochhammer factor vanishes");
        return f.scaled(unit.inverse());
    }
    Monomial inv = m.pow(-1);
    QSeries g = f.shifted(-inv.coeff, inv.qexp);
    return g.div_binomial(inv.coeff, inv.qexp);
}

} // namespace

QSeries phi_eval(const PhiSpec& spec, const Rational& cap) {
    const long r = static_cast<long>(spec.upper.size());
    const long s = static_cast<long>(spec.lower.size());
    const long f = 1 + s - r;
    const Rational& step = spec.base_step;
    if (sgn(step) <= 0) raise(ErrorKind::Internal, "phi_eval requires positive base step");

    // A vanishing upper Pochhammer (a = Q^-m) truncates the series at n = m.
    std::optional<long> trunc;
    for (const auto& a : spec.upper) {
        if (a.coeff.is_one() && sgn(a.qexp) <= 0) {
            Rational m = -a.qexp / step;
            if (is_integer(m) && (!trunc || to_long(m) < *trunc)) trunc = to_long(m);
        }
    }
    const bool arg_positive = sgn(spec.argument.qexp) > 0;
    if (!(f > 0 || (f == 0 && arg_positive) || spec.argument.is_zero() || trunc))
        raise(ErrorKind::NonTerminating,
              "phi series does not terminate: need argument q-order > 0, 1+s-r > 0, "
              "or a truncating upper parameter");
    if (f < 0 && !trunc)
        raise(ErrorKind::NonTerminating, "r > s+1 series requires a truncating upper parameter");

    // After n_settle every per-step q-order increment is nonnegative, so the
    // order bound becomes monotone and can certify termination.
    long n_settle = 0;
    auto settle = [&](const Rational& e0, const Rational& rate) {
        if (sgn(e0) >= 0) return;
        Rational n = -e0 / rate;
        long nn = rat_floor(n) + 1;
        n_settle = std::max(n_settle, nn);
    };
    for (const auto& a : spec.upper)
        if (!a.is_zero()) settle(a.qexp, step);
    if (f > 0) settle(spec.argument.qexp, step * f);

    // Downward shifts (negative upper exponents, f<0 sign powers, a negative
    // argument exponent) are finitely bounded; widen the working cap so the
    // final restriction to cap is exact.
    Rational down(0);
    long horizon = n_settle;
    if (trunc) horizon = std::max(horizon, *trunc + 1);
    for (long n = 0; n <= horizon; ++n) {
        Rational qn = step * n;
        for (const auto& a : spec.upper) {
            if (a.is_zero()) continue;
            Rational e = a.qexp + qn;
            if (sgn(e) < 0) down += -e;
        }
        Rational dn = (f != 0) ? step * n * f : Rational(0);
        dn += spec.argument.qexp;
        if (sgn(dn) < 0) down += -dn;
    }
    const Rational wcap = cap + down;

    QSeries total = QSeries::zero(wcap);
    QSeries term = QSeries::one(wcap);
    Rational ord(0); // exact lower bound on the q-order of term
    const long n_max = 16 * (rat_floor(cap) + 2) * kMaxGridDen + 64 + (trunc ? *trunc : 0);
    const bool ord_can_stop = f > 0 || (f == 0 && arg_positive);
    for (long n = 0;; ++n) {
        total = total + term;
        if (trunc && n == *trunc) break;
        if (spec.argument.is_zero()) break;
        if (n > n_max) raise(ErrorKind::NonTerminating, "phi series exceeded iteration bound");

        // Ratio from n to n+1.
        Rational qn = step * n;
        for (const auto& a : spec.upper) {
            if (a.is_zero()) continue;
            term = term.times_binomial(a.coeff, a.qexp + qn);
            ord += std::min(Rational(0), Rational(a.qexp + qn));
        }
        term = div_one_minus(term, Monomial(Scalar::one(), step * (n + 1)));
        for (const auto& b : spec.lower) {
            if (b.is_zero()) continue;
            Monomial factor(b.coeff, b.qexp + qn);
            term = div_one_minus(term, factor);
            if (sgn(factor.qexp) < 0) ord += -factor.qexp;
        }
        if (f != 0) {
            Scalar sign = unit_power(2 * f);
            term = term.shifted(sign, step * n * f);
            ord += step * n * f;
        }
        term = term.shifted(spec.argument.coeff, spec.argument.qexp);
        ord += spec.argument.qexp;
        term = term.restricted(wcap);

        if (ord_can_stop && n + 1 >= n_settle && ord > cap) break;
    }
    return total.restricted(cap);
}

const char* summation_formula_name(SummationFormula f) {
    switch (f) {
        case SummationFormula::q_gauss: return "q_gauss";
        case SummationFormula::bailey_daum: return "bailey_daum";
        case SummationFormula::q_dixon: return "q_dixon";
        case SummationFormula::heine: return "heine";
    }
    return "?";
}

namespace {

Monomial need(const ParamAssignment& assign, const std::string& name) {
    auto it = assign.find(name);
    if (it == assign.end()) raise(ErrorKind::Internal, "missing assignment for " + name);
    return it->second;
}

VerifyReport skip(const std::string& id, const Rational& cap, const ParamAssignment& assign,
                  const std::string& reason) {
    VerifyReport rep;
    rep.id = id;
    rep.status = VerifyStatus::SKIP;
    rep.cap = cap;
    rep.assignment = render_assignment(assign);
    rep.note = reason;
    return rep;
}

QSeries poch_many(const std::vector<Monomial>& bases, const Rational& step, const Rational& cap) {
    QSeries acc = QSeries::one(cap);
    for (const auto& b : bases) acc = acc * poch_inf(b, step, cap);
    return acc;
}

} // namespace

VerifyReport summation_check(SummationFormula which, const ParamAssignment& assign,
                             const Rational& cap) {
    const std::string id = summation_formula_name(which);
    try {
        switch (which) {
            case SummationFormula::q_gauss: {
                Monomial a = need(assign, "a"), b = need(assign, "b"), c = need(assign, "c");
                if (a.is_zero() || b.is_zero())
                    return skip(id, cap, assign, "upper parameters must be nonzero");
                Monomial z = c * (a * b).pow(-1);
                if (sgn(z.qexp) <= 0)
                    return skip(id, cap, assign, "argument c/ab needs positive q-order");
                QSeries lhs = phi_eval({{a, b}, {c}, Rational(1), z}, cap);
                QSeries rhs = poch_many({c * a.pow(-1), c * b.pow(-1)}, 1, cap) *
                              poch_many({c, z}, 1, cap).invert();
                return compare_series(id, lhs, rhs, cap, assign);
            }
            case SummationFormula::bailey_daum: {
                Monomial a = need(assign, "a"), b = need(assign, "b");
                if (b.is_zero()) return skip(id, cap, assign, "b must be nonzero");
                Monomial z = Monomial(-Scalar::one(), Rational(1)) * b.pow(-1); // -q/b
                if (sgn(z.qexp) <= 0)
                    return skip(id, cap, assign, "argument -q/b needs positive q-order");
                Monomial lower = a * b.pow(-1) * Monomial::q(Rational(1)); // aq/b
                QSeries lhs = phi_eval({{a, b}, {lower}, Rational(1), z}, cap);
                QSeries num = poch_inf(Monomial(-Scalar::one(), Rational(1)), 1, cap) *
                              poch_inf(a * Monomial::q(1), 2, cap) *
                              poch_inf(a * b.pow(-2) * Monomial::q(2), 2, cap);
                QSeries den = poch_inf(lower, 1, cap) * poch_inf(z, 1, cap);
                return compare_series(id, lhs, num * den.invert(), cap, assign);
            }
            case SummationFormula::q_dixon: {
                Monomial a = need(assign, "a"), b = need(assign, "b"), c = need(assign, "c");
                if (a.is_zero() || b.is_zero() || c.is_zero())
                    return skip(id, cap, assign, "parameters must be nonzero");
                auto root = a.sqrt();
                if (!root) return skip(id, cap, assign, "a^(1/2) does not exist in the ring");
                Monomial ra = *root;
                Monomial z = Monomial::q(1) * ra * (b * c).pow(-1); // q a^(1/2) / bc
                if (sgn(z.qexp) <= 0)
                    return skip(id, cap, assign, "argument q*a^(1/2)/bc needs positive q-order");
                Monomial q1 = Monomial::q(1);
                PhiSpec spec{{a, -(ra * q1), b, c},
                             {-ra, a * q1 * b.pow(-1), a * q1 * c.pow(-1)},
                             Rational(1),
                             z};
                QSeries lhs = phi_eval(spec, cap);
                QSeries num = poch_many({a * q1, ra * q1 * b.pow(-1), ra * q1 * c.pow(-1),
                                         a * q1 * (b * c).pow(-1)},
                                        1, cap);
                QSeries den = poch_many({a * q1 * b.pow(-1), a * q1 * c.pow(-1), ra * q1,
                                         ra * q1 * (b * c).pow(-1)},
                                        1, cap);
                return compare_series(id, lhs, num * den.invert(), cap, assign);
            }
            case SummationFormula::heine: {
                Monomial a = need(assign, "a"), b = need(assign, "b"), c = need(assign, "c");
                Monomial z = need(assign, "z");
                if (a.is_zero() || b.is_zero() || c.is_zero())
                    return skip(id, cap, assign, "parameters must be nonzero");
                if (sgn(z.qexp) <= 0)
                    return skip(id, cap, assign, "argument z needs positive q-order");
                Monomial w = a * b * z * c.pow(-1); // abz/c
                if (sgn(w.qexp) <= 0)
                    return skip(id, cap, assign, "transformed argument abz/c needs positive q-order");
                QSeries lhs = phi_eval({{a, b}, {c}, Rational(1), z}, cap);
                QSeries pre = poch_inf(w, 1, cap) * poch_inf(z, 1, cap).invert();
                QSeries rhs =
                    pre * phi_eval({{c * a.pow(-1), c * b.pow(-1)}, {c}, Rational(1), w}, cap);
                return compare_series(id, lhs, rhs, cap, assign);
            }
        }
        raise(ErrorKind::Internal, "unreachable");
    } catch (const Error& e) {
        return skip(id, cap, assign, e.what());
    }
}

} // namespace qrsid
