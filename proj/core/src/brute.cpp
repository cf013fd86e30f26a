#include "qrsid/brute.hpp"

namespace qrsid {

namespace {

bool in_region(const SumComponent& comp, const std::vector<long>& pt) {
    for (const auto& sub : comp.subscripts)
        if (sub.form.eval(pt) < 0) return false;
    return true;
}

Rational effective_exponent(const SumComponent& comp, const ParamAssignment& assign,
                            const std::vector<long>& pt) {
    Rational e = comp.quad.eval(pt) + comp.weight.qexp;
    for (const auto& p : comp.params) {
        const Monomial& value = assign.at(p.name);
        if (!value.is_zero()) e += value.qexp * rat(p.form.eval(pt));
    }
    return e;
}

Scalar term_coefficient(const SumComponent& comp, const ParamAssignment& assign,
                        const std::vector<long>& pt) {
    Rational t = comp.unit.eval(pt);
    if (!is_integer(t)) raise(ErrorKind::Internal, "unit form non-integer in oracle");
    Scalar c = comp.weight.coeff * unit_power(to_long(t));
    for (const auto& p : comp.params) c = c * assign.at(p.name).coeff.pow(p.form.eval(pt));
    return c;
}

// Walks every point of [0, box]^k.
template <typename Fn>
void walk_box(int k, long box, std::vector<long>& pt, int pos, Fn&& fn) {
    if (pos == k) {
        fn(pt);
        return;
    }
    for (long v = 0; v <= box; ++v) {
        pt[pos] = v;
        walk_box(k, box, pt, pos + 1, fn);
    }
}

} // namespace

QSeries naive_sum_eval(const SumSideSpec& spec, const ParamAssignment& assign,
                       const Rational& cap, long box, long max_box) {
    // The box must be large enough that its outer shell is entirely past the
    // cap for every component.
    for (;; box += box / 2 + 8) {
        if (box > max_box)
            raise(ErrorKind::NonTerminating, "oracle box exceeded max size without clearing cap");
        bool shell_clear = true;
        for (const auto& comp : spec.components) {
            std::vector<long> pt(spec.k, 0);
            bool bad = false;
            walk_box(spec.k, box, pt, 0, [&](const std::vector<long>& p) {
                if (bad) return;
                bool on_shell = false;
                for (long v : p)
                    if (v == box) on_shell = true;
                if (!on_shell || !in_region(comp, p)) return;
                if (effective_exponent(comp, assign, p) <= cap) {
                    // A zero coefficient can rescue the point (e.g. 0^m terms).
                    if (!term_coefficient(comp, assign, p).is_zero()) bad = true;
                }
            });
            if (bad) {
                shell_clear = false;
                break;
            }
        }
        if (shell_clear) break;
    }

    QSeries total = QSeries::zero(cap);
    for (const auto& comp : spec.components) {
        std::vector<long> pt(spec.k, 0);
        walk_box(spec.k, box, pt, 0, [&](const std::vector<long>& p) {
            if (!in_region(comp, p)) return;
            Rational e = effective_exponent(comp, assign, p);
            if (e > cap) return;
            Scalar c = term_coefficient(comp, assign, p);
            if (c.is_zero()) return;
            QSeries denom = QSeries::one(cap - e);
            for (const auto& sub : comp.subscripts) {
                long L = sub.form.eval(p);
                denom = denom * poch_finite(Monomial::q(sub.modulus), sub.modulus, L, cap - e);
            }
            total = total + denom.invert().shifted(c, e).restricted(cap);
        });
    }
    return total;
}

} // namespace qrsid
