#include "qrsid/ctengine.hpp"

#include <algorithm>

#include "qrsid/hyper.hpp"

namespace qrsid {

long default_window_bound(const Rational& cap) { return 4 * (rat_floor(cap) + 2); }

ZLaurent ZLaurent::unit(const Rational& qcap, long window_bound) {
    ZLaurent z(qcap, qcap * 1000 + 1000, window_bound);
    z.slices_.emplace(0, QSeries::one(qcap));
    z.min_order_ = Rational(0);
    return z;
}

ZLaurent ZLaurent::from_series(const QSeries& f, long window_bound) {
    ZLaurent z(f.order_cap(), f.order_cap() * 1000 + 1000, window_bound);
    if (!f.is_zero()) {
        z.min_order_ = *f.min_exponent();
        z.slices_.emplace(0, f);
    }
    return z;
}

void ZLaurent::set_slice(int m, QSeries s) {
    if (std::labs(m) > window_bound_)
        raise(ErrorKind::WindowOverflow,
              "z-power " + std::to_string(m) + " beyond window bound " +
                  std::to_string(window_bound_));
    if (s.is_zero()) {
        slices_.erase(m);
        return;
    }
    slices_[m] = std::move(s);
    recompute_min_order();
}

void ZLaurent::recompute_min_order() {
    Rational mo = std::min(cert_, qcap_);
    bool any = false;
    for (const auto& [m, s] : slices_) {
        auto e = s.min_exponent();
        if (!e) continue;
        if (!any || *e < mo) mo = std::min(mo, *e);
        any = true;
    }
    min_order_ = mo;
}

ZLaurent factor_expand(const FactorSpec& f, const Rational& qcap, long window_bound) {
    if (window_bound < 0) window_bound = default_window_bound(qcap);
    if (f.z_power == 0) raise(ErrorKind::Internal, "factor z_power must be nonzero");
    if (sgn(f.step) <= 0) raise(ErrorKind::Internal, "factor step must be positive");
    if (f.base.is_zero()) return ZLaurent::unit(qcap, window_bound);
    if (f.inverted && sgn(f.base.qexp) <= 0)
        raise(ErrorKind::DivergentFactor,
              "inverted z-factor needs positive base q-order: " + f.base.str());

    ZLaurent out(qcap, qcap, window_bound);
    // Slice n comes from Euler's expansions:
    //   (x; Q)_inf   = sum (-1)^n Q^C(n,2) x^n / (Q;Q)_n
    //   1/(x; Q)_inf = sum x^n / (Q;Q)_n
    QSeries inv_poch = QSeries::one(qcap);
    Rational mo(0);
    for (long n = 0;; ++n) {
        Rational order = f.base.qexp * n;
        if (!f.inverted) order += f.step * rat(n * (n - 1), 2);
        if (order > qcap) {
            // Quadratic growth can dip before rising; only stop once rising.
            if (f.inverted) break;
            if (n == 0 || f.base.qexp + f.step * (n - 1) > 0) break;
        }
        long m = n * f.z_power;
        if (std::labs(m) > window_bound)
            raise(ErrorKind::WindowOverflow,
                  "factor window exceeds bound " + std::to_string(window_bound) + ": " +
                      f.base.str());
        if (n > 0) inv_poch = inv_poch.div_binomial(Scalar::one(), f.step * n);
        if (order <= qcap) {
            Scalar c = f.base.coeff.pow(n);
            if (!f.inverted && n % 2 == 1) c = -c;
            QSeries s = inv_poch.shifted(c, order).restricted(qcap);
            if (!s.is_zero()) {
                out.slices_.emplace(static_cast<int>(m), std::move(s));
                if (order < mo) mo = order;
            }
        }
    }
    out.min_order_ = mo;
    return out;
}

ZLaurent laurent_mul(const ZLaurent& a, const ZLaurent& b) {
    long wb = std::max(a.window_bound(), b.window_bound());
    Rational qcap = std::min(a.qcap(), b.qcap());
    Rational cert = std::min(Rational(a.cert() + b.min_order()), Rational(b.cert() + a.min_order()));
    cert = std::min(cert, qcap); // empty products below are dropped silently
    ZLaurent out(qcap, cert, wb);

    struct SliceRef {
        int m;
        const QSeries* s;
        Rational ord;
    };
    auto collect = [](const ZLaurent& z) {
        std::vector<SliceRef> v;
        for (const auto& [m, s] : z.slices()) {
            auto e = s.min_exponent();
            if (e) v.push_back({m, &s, *e});
        }
        return v;
    };
    std::vector<SliceRef> va = collect(a), vb = collect(b);
    std::map<int, QSeries> acc;
    for (const auto& sa : va) {
        for (const auto& sb : vb) {
            if (sa.ord + sb.ord > qcap) continue;
            QSeries prod = (*sa.s) * (*sb.s);
            if (prod.is_zero()) continue;
            int m = sa.m + sb.m;
            auto it = acc.find(m);
            if (it == acc.end()) acc.emplace(m, std::move(prod));
            else it->second = it->second + prod;
        }
    }
    for (auto& [m, s] : acc) {
        if (s.is_zero()) continue;
        if (std::labs(m) > wb)
            raise(ErrorKind::WindowOverflow,
                  "product window " + std::to_string(m) + " exceeds bound " + std::to_string(wb));
        out.slices_.emplace(m, std::move(s));
    }
    out.recompute_min_order();
    return out;
}

QSeries ZLaurent::slice(int m, const Rational& cap) const {
    auto it = slices_.find(m);
    if (it != slices_.end()) return it->second.restricted(cap);
    if (cert_ >= cap) return QSeries::zero(cap);
    raise(ErrorKind::Internal,
          "slice z^" + std::to_string(m) + " is neither stored nor certified to cap");
}

QSeries constant_term(const ZLaurent& a, int m) {
    return a.slice(m, std::min(a.cert(), a.qcap()));
}

namespace {

// Least q-order over the slices of one factor (0 for inverted; possibly
// negative for non-inverted factors with negative base exponent).
Rational factor_floor(const FactorSpec& f) {
    if (f.inverted || f.base.is_zero() || sgn(f.base.qexp) >= 0) return Rational(0);
    Rational best(0);
    for (long n = 1;; ++n) {
        Rational order = f.base.qexp * n + f.step * rat(n * (n - 1), 2);
        if (order < best) best = order;
        if (f.base.qexp + f.step * n > 0 && order > best) break;
        if (n > 4096) raise(ErrorKind::Internal, "factor floor scan runaway");
    }
    return best;
}

} // namespace

ZLaurent expand_product(const std::vector<FactorSpec>& factors, const Rational& cap,
                        long window_bound) {
    Rational slack(0);
    for (const auto& f : factors) slack += -factor_floor(f);
    Rational qcap = cap + slack;
    if (window_bound < 0) window_bound = default_window_bound(qcap);
    ZLaurent acc = ZLaurent::unit(qcap, window_bound);
    for (const auto& f : factors) acc = laurent_mul(acc, factor_expand(f, qcap, window_bound));
    return acc;
}

const char* master_formula_name(MasterFormula f) {
    switch (f) {
        case MasterFormula::gr_4_10_8: return "gr_4_10_8";
        case MasterFormula::gr_4_11_2: return "gr_4_11_2";
        case MasterFormula::gr_4_11_3: return "gr_4_11_3";
        case MasterFormula::rosengren_3_2: return "rosengren_3_2";
        case MasterFormula::prop_3_2: return "prop_3_2";
        case MasterFormula::eq_2_1: return "eq_2_1";
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

FactorSpec num(const Monomial& base, int zp) { return {base, zp, Rational(1), false}; }
FactorSpec den(const Monomial& base, int zp) { return {base, zp, Rational(1), true}; }

QSeries poch_over(const std::vector<Monomial>& numer, const std::vector<Monomial>& denom,
                  const Rational& cap) {
    QSeries acc = QSeries::one(cap);
    for (const auto& m : numer) acc = acc * poch_inf(m, 1, cap);
    QSeries d = QSeries::one(cap);
    for (const auto& m : denom) d = d * poch_inf(m, 1, cap);
    return acc * d.invert();
}

const Monomial kQ = Monomial::q(Rational(1));
const Monomial kOne = Monomial::one();

} // namespace

VerifyReport master_check(MasterFormula which, const ParamAssignment& assign,
                          const Rational& cap) {
    const std::string id = master_formula_name(which);
    try {
        std::vector<FactorSpec> integrand;
        QSeries rhs = QSeries::one(cap);
        switch (which) {
            case MasterFormula::gr_4_10_8: {
                Monomial a1 = need(assign, "a1"), a2 = need(assign, "a2"), a3 = need(assign, "a3");
                Monomial b1 = need(assign, "b1"), d1 = need(assign, "d1");
                Monomial c1 = need(assign, "c1"), c2 = need(assign, "c2"), c3 = need(assign, "c3");
                if (b1.is_zero() || d1.is_zero() || c1.is_zero() || c2.is_zero() || c3.is_zero())
                    return skip(id, cap, assign, "b1, d1, c1..c3 must be nonzero");
                Rational lhs_ord = a1.qexp + a2.qexp + a3.qexp;
                if (a1.is_zero() || a2.is_zero() || a3.is_zero()) lhs_ord = cap * 2 + 1000;
                if (!(lhs_ord > c1.qexp + c2.qexp + c3.qexp))
                    return skip(id, cap, assign, "needs q-order(a1 a2 a3) > q-order(c1 c2 c3)");
                Monomial z = b1 * d1.pow(-1);
                if (sgn(z.qexp) <= 0)
                    return skip(id, cap, assign, "phi argument b1/d1 needs positive q-order");
                integrand = {num(a1, 1),  num(a2, 1),  num(a3, 1),  num(b1, -1),
                             den(c1, 1),  den(c2, 1),  den(c3, 1),  den(d1, -1)};
                QSeries pre = poch_over({a1 * d1, a2 * d1, a3 * d1, z}, {kQ, c1 * d1, c2 * d1, c3 * d1}, cap);
                PhiSpec phi{{c1 * d1, c2 * d1, c3 * d1, kQ * d1 * b1.pow(-1)},
                            {a1 * d1, a2 * d1, a3 * d1},
                            Rational(1),
                            z};
                rhs = pre * phi_eval(phi, cap);
                break;
            }
            case MasterFormula::gr_4_11_2: {
                Monomial a = need(assign, "a"), b = need(assign, "b"), c = need(assign, "c");
                Monomial al = need(assign, "alpha"), be = need(assign, "beta");
                if (a.is_zero() || b.is_zero() || c.is_zero() || al.is_zero() || be.is_zero())
                    return skip(id, cap, assign, "all parameters must be nonzero");
                integrand = {num(c * be.pow(-1), 1), num(kQ * (c * al).pow(-1), 1),
                             num(c * al, -1), num(kQ * be * (c).pow(-1), -1),
                             den(a, 1), den(b, 1), den(al, -1), den(be, -1)};
                rhs = poch_over({a * b * al * be, c, kQ * c.pow(-1), c * al * be.pow(-1),
                                 kQ * be * (c * al).pow(-1)},
                                {a * al, a * be, b * al, b * be, kQ}, cap);
                break;
            }
            case MasterFormula::gr_4_11_3: {
                Monomial a = need(assign, "a"), b = need(assign, "b"), c = need(assign, "c");
                Monomial al = need(assign, "alpha"), be = need(assign, "beta"),
                         ga = need(assign, "gamma");
                if (a.is_zero() || b.is_zero() || c.is_zero() || al.is_zero() || be.is_zero() ||
                    ga.is_zero())
                    return skip(id, cap, assign, "all parameters must be nonzero");
                Monomial delta = a * b * c * al * be;
                integrand = {num(delta, 1), num(kQ * ga.pow(-1), 1), num(ga, -1),
                             num(ga * (al * be).pow(-1), 1), num(kQ * al * be * ga.pow(-1), -1),
                             den(a, 1), den(b, 1), den(c, 1), den(al, -1), den(be, -1)};
                rhs = poch_over({ga * al.pow(-1), kQ * al * ga.pow(-1), ga * be.pow(-1),
                                 kQ * be * ga.pow(-1), delta * a.pow(-1), delta * b.pow(-1),
                                 delta * c.pow(-1)},
                                {a * al, a * be, b * al, b * be, c * al, c * be, kQ}, cap);
                break;
            }
            case MasterFormula::rosengren_3_2: {
                Monomial a1 = need(assign, "alpha1"), a2 = need(assign, "alpha2");
                Monomial b1 = need(assign, "beta1"), b2 = need(assign, "beta2"),
                         b3 = need(assign, "beta3");
                if (b1.is_zero() || b2.is_zero() || b3.is_zero() || a1.is_zero() || a2.is_zero())
                    return skip(id, cap, assign, "all parameters must be nonzero");
                if (!(a1 * a2 == b1 * b2 * b3))
                    return skip(id, cap, assign, "balancing alpha1 alpha2 = beta1 beta2 beta3 fails");
                Monomial z = a1 * b1.pow(-1);
                if (sgn(z.qexp) <= 0)
                    return skip(id, cap, assign, "phi argument alpha1/beta1 needs positive q-order");
                integrand = {num(a1, 1), num(a2, 1), num(kQ, 1), num(kOne, -1),
                             den(b1, 1), den(b2, 1), den(b3, 1)};
                QSeries pre = poch_over({b1, z}, {kQ}, cap);
                rhs = pre * phi_eval({{a2 * b2.pow(-1), a2 * b3.pow(-1)}, {b1}, Rational(1), z},
                                     cap);
                break;
            }
            case MasterFormula::prop_3_2: {
                Monomial a = need(assign, "a"), b = need(assign, "b"), c = need(assign, "c");
                Monomial t = need(assign, "t"), d = need(assign, "d");
                if (t.is_zero() || d.is_zero())
                    return skip(id, cap, assign, "t and d must be nonzero");
                if (sgn(t.qexp) <= 0)
                    return skip(id, cap, assign, "phi argument t needs positive q-order");
                integrand = {num(a * b, 1), num(c, 1), num(kQ * t.pow(-1), 1), num(t, -1),
                             den(a, 1), den(b, 1), den(c * t.pow(-1), 1), den(d, -1)};
                QSeries pre = poch_over({a * b * d, d * kQ * t.pow(-1), t, c},
                                        {kQ, a * d, b * d, c * d * t.pow(-1)}, cap);
                rhs = pre * phi_eval({{a, b, c * d * t.pow(-1)}, {c, a * b * d}, Rational(1), t},
                                     cap);
                break;
            }
            case MasterFormula::eq_2_1: {
                Monomial b1 = need(assign, "beta1"), b3 = need(assign, "beta3");
                if (b1.is_zero() || b3.is_zero())
                    return skip(id, cap, assign, "beta1, beta3 must be nonzero");
                integrand = {num(b1 * b3, 1), num(kQ, 1), num(kOne, -1), den(b1, 1), den(b3, 1)};
                rhs = poch_over({b1, b3}, {kQ}, cap);
                break;
            }
        }
        ZLaurent z = expand_product(integrand, cap);
        QSeries lhs = z.slice(0, cap);
        return compare_series(id, lhs, rhs.restricted(cap), cap, assign);
    } catch (const Error& e) {
        return skip(id, cap, assign, e.what());
    }
}

} // namespace qrsid
