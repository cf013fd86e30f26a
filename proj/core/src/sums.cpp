#include "qrsid/sums.hpp"

#include <algorithm>
#include <numeric>

namespace qrsid {

QuadForm QuadForm::zero(int k) {
    QuadForm f;
    f.matrix.assign(k, std::vector<Rational>(k, Rational(0)));
    f.linear.assign(k, Rational(0));
    return f;
}

Rational QuadForm::eval(const std::vector<long>& pt) const {
    Rational acc = constant;
    size_t k = matrix.size();
    for (size_t a = 0; a < k; ++a) {
        if (pt[a] == 0) continue;
        for (size_t b = 0; b < k; ++b) {
            if (pt[b] == 0) continue;
            if (sgn(matrix[a][b]) != 0) acc += matrix[a][b] * rat(pt[a]) * rat(pt[b]);
        }
    }
    for (size_t a = 0; a < linear.size(); ++a)
        if (pt[a] != 0 && sgn(linear[a]) != 0) acc += linear[a] * rat(pt[a]);
    return acc;
}

bool SumSideSpec::has_params() const {
    for (const auto& c : components)
        if (!c.params.empty()) return true;
    return false;
}

namespace {

long lcm_den(long acc, const Rational& r) {
    Rational red = r;
    red.canonicalize();
    if (!red.get_den().fits_slong_p()) raise(ErrorKind::GridOverflow, "exponent denominator too large");
    return std::lcm(acc, red.get_den().get_si());
}

// Effective exponent of one component under an assignment, as an
// integer-scaled quadratic for fast lattice scans.
struct ScaledExponent {
    long scale = 1;
    std::vector<std::vector<long>> matrix;
    std::vector<long> linear;
    long constant = 0;

    long long eval(const std::vector<long>& pt) const {
        long long acc = constant;
        size_t k = matrix.size();
        for (size_t a = 0; a < k; ++a) {
            if (pt[a] == 0) continue;
            long long row = 0;
            for (size_t b = 0; b < k; ++b)
                if (pt[b] != 0 && matrix[a][b] != 0) row += static_cast<long long>(matrix[a][b]) * pt[b];
            acc += row * pt[a];
        }
        for (size_t a = 0; a < linear.size(); ++a)
            if (pt[a] != 0) acc += static_cast<long long>(linear[a]) * pt[a];
        return acc;
    }
};

struct ResolvedParam {
    LinForm form;
    Scalar coeff;
};

struct ComponentPlan {
    const SumComponent* comp;
    ScaledExponent expo;
    std::vector<ResolvedParam> params; // coefficient parts only; exponents folded
};

ComponentPlan plan_component(const SumComponent& comp, const ParamAssignment& assign, int k) {
    ComponentPlan plan;
    plan.comp = &comp;

    QuadForm eff = comp.quad;
    if (static_cast<int>(eff.matrix.size()) != k)
        raise(ErrorKind::Internal, "quad form dimension mismatch");
    eff.constant += comp.weight.qexp;
    for (const auto& p : comp.params) {
        auto it = assign.find(p.name);
        if (it == assign.end())
            raise(ErrorKind::Internal, "parameter '" + p.name + "' not assigned");
        const Monomial& value = it->second;
        if (!value.is_zero()) {
            for (int m = 0; m < k; ++m)
                if (p.form.coeffs[m] != 0) eff.linear[m] += value.qexp * rat(p.form.coeffs[m]);
            eff.constant += value.qexp * rat(p.form.constant);
        }
        plan.params.push_back({p.form, value.coeff});
    }

    long D = 1;
    for (const auto& row : eff.matrix)
        for (const auto& e : row) D = lcm_den(D, e);
    for (const auto& e : eff.linear) D = lcm_den(D, e);
    D = lcm_den(D, eff.constant);

    plan.expo.scale = D;
    plan.expo.matrix.assign(k, std::vector<long>(k, 0));
    plan.expo.linear.assign(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) plan.expo.matrix[a][b] = to_long(eff.matrix[a][b] * D);
    for (int a = 0; a < k; ++a) plan.expo.linear[a] = to_long(eff.linear[a] * D);
    plan.expo.constant = to_long(eff.constant * D);
    return plan;
}

struct LatticePoint {
    std::vector<long> pt;
    long long scaled_e; // E * expo.scale
};

// All region points of one layer (fixed index sum), appended to out.
// Returns the minimum scaled E over region points in the layer.
class LayerScanner {
public:
    LayerScanner(const ComponentPlan& plan, int k, long long cap_scaled, long long& budget)
        : plan_(plan), k_(k), cap_scaled_(cap_scaled), budget_(budget), pt_(k, 0) {}

    // min over the layer of scaled E, or nullopt when the layer has no region
    // points; contributing points are collected into sink.
    std::optional<long long> scan(long s, std::vector<LatticePoint>& sink) {
        min_e_.reset();
        sink_ = &sink;
        fill(0, s);
        return min_e_;
    }

private:
    void fill(int pos, long remaining) {
        if (pos == k_ - 1) {
            pt_[pos] = remaining;
            visit();
            return;
        }
        for (long v = 0; v <= remaining; ++v) {
            pt_[pos] = v;
            fill(pos + 1, remaining - v);
        }
    }

    void visit() {
        if (--budget_ < 0)
            raise(ErrorKind::NonTerminating, "lattice point budget exhausted");
        for (const auto& sub : plan_.comp->subscripts)
            if (sub.form.eval(pt_) < 0) return;
        long long e = plan_.expo.eval(pt_);
        if (!min_e_ || e < *min_e_) min_e_ = e;
        if (e <= cap_scaled_) sink_->push_back({pt_, e});
    }

    const ComponentPlan& plan_;
    int k_;
    long long cap_scaled_;
    long long& budget_;
    std::vector<long> pt_;
    std::optional<long long> min_e_;
    std::vector<LatticePoint>* sink_ = nullptr;
};

// Cache of (q^n; q^n)_inf expansions and the tails (q^{n(L+1)}; q^n)_inf.
class PochCache {
public:
    PochCache(Rational cap) : cap_(std::move(cap)) {}

    const QSeries& inv_inf(const Rational& modulus) {
        auto it = inv_.find(modulus);
        if (it != inv_.end()) return it->second;
        QSeries s = poch_inf(Monomial::q(modulus), modulus, cap_).invert();
        return inv_.emplace(modulus, std::move(s)).first->second;
    }

    const QSeries& tail(const Rational& modulus, long L) {
        auto key = std::make_pair(modulus, L);
        auto it = tails_.find(key);
        if (it != tails_.end()) return it->second;
        QSeries s = poch_inf(Monomial::q(modulus * (L + 1)), modulus, cap_);
        return tails_.emplace(key, std::move(s)).first->second;
    }

private:
    Rational cap_;
    std::map<Rational, QSeries> inv_;
    std::map<std::pair<Rational, long>, QSeries> tails_;
};

QSeries eval_component(const SumComponent& comp, const ComponentPlan& plan, int k,
                       const Rational& cap, const EvalConfig& config) {
    long long cap_scaled = rat_floor(cap * plan.expo.scale);
    long long budget = config.point_budget;
    LayerScanner scanner(plan, k, cap_scaled, budget);

    std::vector<LatticePoint> points;
    long max_layer = config.safety_layer_factor * (rat_floor(cap) + 1);
    int quiet = 0;
    for (long s = 0;; ++s) {
        if (s > max_layer)
            raise(ErrorKind::NonTerminating,
                  "frontier still reaches the cap at index sum " + std::to_string(s));
        auto layer_min = scanner.scan(s, points);
        if (!layer_min || *layer_min > cap_scaled) {
            if (++quiet >= config.quiet_layers) break;
        } else {
            quiet = 0;
        }
    }

    std::sort(points.begin(), points.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.pt < b.pt; });

    // The term at i factors as
    //   q^E * unit * coeffs * prod_j tail_j(L_j) * prod_j 1/(q^n_j; q^n_j)_inf
    // using 1/(x;q)_L = (q^{(L+1)n}; q^n)_inf / (q^n; q^n)_inf; the common
    // infinite inverses multiply once at the end.
    long long min_scaled = 0;
    for (const auto& p : points) min_scaled = std::min(min_scaled, p.scaled_e);
    Rational slack = rat(static_cast<long>(-min_scaled), plan.expo.scale);
    Rational work_cap = cap + slack;
    PochCache cache(work_cap);

    QSeries total = QSeries::zero(cap);
    for (const auto& p : points) {
        Rational e = rat(static_cast<long>(p.scaled_e), plan.expo.scale);
        Rational unit_t = comp.unit.eval(p.pt);
        if (!is_integer(unit_t))
            raise(ErrorKind::Internal, "unit form is not integer-valued on the region");
        Scalar coeff = comp.weight.coeff * unit_power(to_long(unit_t));
        for (const auto& rp : plan.params) {
            long expn = rp.form.eval(p.pt);
            coeff = coeff * rp.coeff.pow(expn);
        }
        if (coeff.is_zero()) continue;

        Rational local_cap = cap - e;
        QSeries acc = QSeries::one(local_cap);
        for (size_t j = 0; j < comp.subscripts.size(); ++j) {
            long L = comp.subscripts[j].form.eval(p.pt);
            const QSeries& t = cache.tail(comp.subscripts[j].modulus, L);
            if (t.term_count() == 1 && t.coeff(Rational(0)).is_one()) continue;
            acc = acc * t.restricted(local_cap);
        }
        total = total + acc.shifted(coeff, e).restricted(cap);
    }

    for (const auto& sub : comp.subscripts)
        total = total * cache.inv_inf(sub.modulus).restricted(work_cap);
    return total;
}

} // namespace

QSeries sum_side_eval(const SumSideSpec& spec, const ParamAssignment& assign,
                      const Rational& cap, const EvalConfig& config) {
    if (spec.components.empty()) raise(ErrorKind::Internal, "sum side has no components");
    QSeries total = QSeries::zero(cap);
    for (const auto& comp : spec.components) {
        ComponentPlan plan = plan_component(comp, assign, spec.k);
        total = total + eval_component(comp, plan, spec.k, cap, config);
    }
    return total;
}

SumSideSpec fold_params(const SumSideSpec& spec, const ParamAssignment& assign) {
    SumSideSpec out;
    out.k = spec.k;
    for (const auto& comp : spec.components) {
        SumComponent folded = comp;
        folded.params.clear();
        long grid = comp.grid;
        for (const auto& p : comp.params) {
            auto it = assign.find(p.name);
            if (it == assign.end())
                raise(ErrorKind::Internal, "parameter '" + p.name + "' not assigned");
            const Monomial& value = it->second;
            if (value.is_zero())
                raise(ErrorKind::Internal,
                      "cannot fold the zero monomial; evaluate with the assignment instead");
            auto decomp = value.coeff.as_rational_times_root();
            if (!decomp || decomp->first != 1 || decomp->second % 3 != 0)
                raise(ErrorKind::Internal,
                      "parameter coefficient " + value.coeff.str() + " is not a power of i");
            long t = decomp->second / 3; // z12^(3t) = i^t
            for (int m = 0; m < out.k; ++m) {
                if (p.form.coeffs[m] == 0) continue;
                folded.quad.linear[m] += value.qexp * rat(p.form.coeffs[m]);
                folded.unit.linear[m] += rat(t * p.form.coeffs[m]);
            }
            folded.quad.constant += value.qexp * rat(p.form.constant);
            folded.unit.constant += rat(t * p.form.constant);
            grid = lcm_den(grid, value.qexp);
        }
        if (grid > kMaxGridDen)
            raise(ErrorKind::GridOverflow, "folded exponents leave the supported grid");
        folded.grid = static_cast<int>(grid);
        out.components.push_back(std::move(folded));
    }
    return out;
}

} // namespace qrsid
