#pragma once

#include "qrsid/report.hpp"

namespace qrsid {

/// One integrand factor (base * z^z_power; q^step)_inf^(+-1).
/// Expansion direction is fixed by the sign of z_power: z-factors expand in
/// positive powers, 1/z-factors in negative powers, which is the formal
/// counterpart of the contour choice. Inverted factors need base q-order > 0
/// so each z-slice gains q-order linearly; non-inverted factors gain
/// quadratically and tolerate any base q-order.
struct FactorSpec {
    Monomial base;
    int z_power = 1;
    Rational step = Rational(1);
    bool inverted = false;
};

/// Truncated bivariate series sum_m z^m * (QSeries in q), with a completeness
/// certificate: every z-power without a stored slice has q-order > cert().
class ZLaurent {
public:
    ZLaurent(Rational qcap, Rational cert, long window_bound)
        : qcap_(std::move(qcap)), cert_(std::move(cert)), window_bound_(window_bound) {}

    /// The constant 1 (exact: omitted slices are identically zero).
    static ZLaurent unit(const Rational& qcap, long window_bound);
    /// A z-free multiplier.
    static ZLaurent from_series(const QSeries& f, long window_bound);

    const Rational& qcap() const { return qcap_; }
    const Rational& cert() const { return cert_; }
    const Rational& min_order() const { return min_order_; }
    long window_bound() const { return window_bound_; }
    const std::map<int, QSeries>& slices() const { return slices_; }

    bool has_slice(int m) const { return slices_.count(m) > 0; }
    void set_slice(int m, QSeries s);

    /// The z^m slice truncated at cap: stored, or certified zero.
    QSeries slice(int m, const Rational& cap) const;

private:
    Rational qcap_;
    Rational cert_;
    Rational min_order_ = Rational(0);
    long window_bound_;
    std::map<int, QSeries> slices_;

    friend ZLaurent laurent_mul(const ZLaurent& a, const ZLaurent& b);
    friend ZLaurent factor_expand(const FactorSpec& f, const Rational& qcap, long window_bound);
    void recompute_min_order();
};

/// Default window bound 4*(cap+2).
long default_window_bound(const Rational& cap);

/// Certified truncated expansion of a single factor. DivergentFactor when an
/// inverted factor lacks positive base q-order; WindowOverflow when the
/// window bound is exceeded.
ZLaurent factor_expand(const FactorSpec& f, const Rational& qcap, long window_bound = -1);

/// Convolution over z-powers; certificates and order bounds combine.
ZLaurent laurent_mul(const ZLaurent& a, const ZLaurent& b);

/// [z^m], exact to cap (defaults to the certificate floor).
QSeries constant_term(const ZLaurent& a, int m = 0);

/// Expands the product of factors with the internal q-cap widened so the
/// result is certified exact to cap (handles negative-order factors).
ZLaurent expand_product(const std::vector<FactorSpec>& factors, const Rational& cap,
                        long window_bound = -1);

enum class MasterFormula { gr_4_10_8, gr_4_11_2, gr_4_11_3, rosengren_3_2, prop_3_2, eq_2_1 };

const char* master_formula_name(MasterFormula f);

/// Executable check of one master integral evaluation: the z^0 coefficient of
/// the integrand against the closed form. Inadmissible assignments SKIP.
/// Assignment names per formula:
///   gr_4_10_8:     a1 a2 a3 b1 c1 c2 c3 d1
///   gr_4_11_2:     a b c alpha beta
///   gr_4_11_3:     a b c alpha beta gamma
///   rosengren_3_2: alpha1 alpha2 beta1 beta2 beta3
///   prop_3_2:      a b c t d
///   eq_2_1:        beta1 beta3
VerifyReport master_check(MasterFormula which, const ParamAssignment& assign, const Rational& cap);

} // namespace qrsid
