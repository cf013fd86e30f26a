#include "qrsid/products.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "text_cursor.hpp"

namespace qrsid {

QSeries poch_finite(const Monomial& a, const Rational& step, long n, const Rational& cap) {
    if (n < 0) raise(ErrorKind::Internal, "poch_finite with negative subscript");
    QSeries out = QSeries::one(cap);
    if (a.is_zero()) return out;
    for (long k = 0; k < n; ++k) {
        Rational e = a.qexp + step * rat(k);
        out = out.times_binomial(a.coeff, e);
    }
    return out;
}

QSeries poch_inf(const Monomial& a, const Rational& step, const Rational& cap) {
    if (sgn(step) <= 0) raise(ErrorKind::Internal, "poch_inf requires step > 0");
    if (a.is_zero()) return QSeries::one(cap);
    if (sgn(a.qexp) < 0)
        raise(ErrorKind::DivergentProduct,
              "(a; q^s)_inf with q-order of a negative: " + a.str());
    if (sgn(a.qexp) == 0 && a.coeff.is_one())
        raise(ErrorKind::DivergentProduct, "(1; q^s)_inf has no unit constant term");
    QSeries out = QSeries::one(cap);
    for (Rational e = a.qexp; e <= cap; e += step) out = out.times_binomial(a.coeff, e);
    return out;
}

Monomial ProductFactor::base(const ParamAssignment& assign) const {
    Monomial m(coeff, qexp);
    for (const auto& [name, e] : params) {
        auto it = assign.find(name);
        if (it == assign.end())
            raise(ErrorKind::Internal, "parameter '" + name + "' not assigned");
        m = m * it->second.pow(e);
    }
    return m;
}

bool ProductExpr::has_params() const {
    for (const auto& t : terms)
        for (const auto& f : t.factors)
            if (!f.params.empty()) return true;
    return false;
}

std::vector<std::string> ProductExpr::param_names() const {
    std::set<std::string> names;
    for (const auto& t : terms)
        for (const auto& f : t.factors)
            for (const auto& [n, e] : f.params) names.insert(n);
    return {names.begin(), names.end()};
}

QSeries product_term_eval(const ProductTerm& term, const ParamAssignment& assign,
                          const Rational& cap) {
    QSeries acc = QSeries::one(cap);
    for (const auto& f : term.factors) {
        Monomial base = f.base(assign);
        if (f.power == 0) continue;
        QSeries p = poch_inf(base, f.modulus, cap);
        QSeries unit = f.power > 0 ? p : p.invert();
        for (int t = 0; t < std::abs(f.power); ++t) acc = acc * unit;
    }
    if (!term.weight.is_one()) acc = acc.shifted(term.weight.coeff, term.weight.qexp).restricted(cap);
    return acc;
}

QSeries product_expr_eval(const ProductExpr& expr, const ParamAssignment& assign,
                          const Rational& cap) {
    if (expr.terms.empty()) raise(ErrorKind::Internal, "empty product expression");
    QSeries acc = product_term_eval(expr.terms[0], assign, cap);
    for (size_t t = 1; t < expr.terms.size(); ++t)
        acc = acc + product_term_eval(expr.terms[t], assign, cap);
    return acc;
}

QSeries series_log1(const QSeries& f) {
    auto lead = f.min_exponent();
    if (!lead || sgn(*lead) != 0 || !f.coeff(Rational(0)).is_one())
        raise(ErrorKind::NonUnitLeadingTerm, "series_log1 requires constant term exactly 1");
    long long capk = rat_floor(f.order_cap() * f.grid_den());
    std::vector<Scalar> fv(static_cast<size_t>(std::max<long long>(capk, 0)) + 1);
    for (const auto& [k, c] : f.terms())
        if (k >= 0 && k <= capk) fv[static_cast<size_t>(k)] = c;
    // b_m = m c_m from f' = (log f)' f, then c_m = b_m / m.
    std::vector<Scalar> b(fv.size());
    for (long long m = 1; m <= capk; ++m) {
        Scalar acc = fv[static_cast<size_t>(m)] * Scalar(m);
        for (long long k = 1; k < m; ++k) {
            if (b[static_cast<size_t>(k)].is_zero()) continue;
            const Scalar& fm = fv[static_cast<size_t>(m - k)];
            if (fm.is_zero()) continue;
            acc -= b[static_cast<size_t>(k)] * fm;
        }
        b[static_cast<size_t>(m)] = acc;
    }
    QSeries out(f.grid_den(), f.order_cap());
    for (long long m = 1; m <= capk; ++m) {
        if (b[static_cast<size_t>(m)].is_zero()) continue;
        out.set_term(m, b[static_cast<size_t>(m)] / Scalar(m));
    }
    return out;
}

QSeries series_exp(const QSeries& g) {
    auto lead = g.min_exponent();
    if (lead && sgn(*lead) <= 0)
        raise(ErrorKind::Internal, "series_exp requires strictly positive order");
    long long capk = rat_floor(g.order_cap() * g.grid_den());
    if (capk < 0) return QSeries::zero(g.order_cap(), g.grid_den());
    std::vector<Scalar> gv(static_cast<size_t>(capk) + 1), ev(static_cast<size_t>(capk) + 1);
    for (const auto& [k, c] : g.terms())
        if (k >= 1 && k <= capk) gv[static_cast<size_t>(k)] = c;
    ev[0] = Scalar::one();
    for (long long m = 1; m <= capk; ++m) {
        Scalar acc;
        for (long long t = 1; t <= m; ++t) {
            if (gv[static_cast<size_t>(t)].is_zero()) continue;
            const Scalar& ep = ev[static_cast<size_t>(m - t)];
            if (ep.is_zero()) continue;
            acc += Scalar(t) * gv[static_cast<size_t>(t)] * ep;
        }
        if (!acc.is_zero()) ev[static_cast<size_t>(m)] = acc / Scalar(m);
    }
    QSeries out(g.grid_den(), g.order_cap());
    for (long long m = 0; m <= capk; ++m)
        if (!ev[static_cast<size_t>(m)].is_zero()) out.set_term(m, ev[static_cast<size_t>(m)]);
    return out;
}

std::vector<ProductExponent> prodmake(const QSeries& f, const Rational& cap) {
    QSeries g = f.restricted(std::min(cap, f.order_cap()));
    int den = g.grid_den();
    QSeries gi = g.rescale(rat(den));
    QSeries lg = series_log1(gi);
    long long capk = rat_floor(lg.order_cap() * lg.grid_den());
    if (lg.grid_den() != 1) raise(ErrorKind::Internal, "prodmake expected integer grid");
    // m * c_m = sum_{d | m} d e_d; peel off divisors.
    std::vector<Rational> e(static_cast<size_t>(std::max<long long>(capk, 0)) + 1, Rational(0));
    for (long long m = 1; m <= capk; ++m) {
        Scalar bm = lg.coeff(rat(m)) * Scalar(m);
        if (!bm.is_rational())
            raise(ErrorKind::NonRationalExponent,
                  "product exponent at q^" + rat_str(rat(m, den)) + " is not rational");
        Rational acc = bm.rational_value();
        for (long long d = 1; d < m; ++d)
            if (m % d == 0 && sgn(e[static_cast<size_t>(d)]) != 0) acc -= rat(d) * e[static_cast<size_t>(d)];
        e[static_cast<size_t>(m)] = acc / rat(m);
    }
    std::vector<ProductExponent> out;
    for (long long m = 1; m <= capk; ++m)
        if (sgn(e[static_cast<size_t>(m)]) != 0)
            out.push_back({rat(m, den), e[static_cast<size_t>(m)]});
    return out;
}

QSeries product_from_exponents(const std::vector<ProductExponent>& exps, const Rational& cap) {
    long grid = 1;
    for (const auto& pe : exps) {
        Rational a = pe.a;
        a.canonicalize();
        grid = std::lcm<long>(grid, a.get_den().get_si());
    }
    if (grid > kMaxGridDen) raise(ErrorKind::GridOverflow, "product exponents off supported grid");
    // log of the product: sum_a e_a sum_j q^(a j) / j, then exponentiate.
    QSeries lg = QSeries::zero(cap, static_cast<int>(grid));
    for (const auto& pe : exps) {
        for (long j = 1; pe.a * j <= cap; ++j) {
            Rational coeff = pe.e / j;
            lg.add_term(to_long(pe.a * j * grid), Scalar(coeff));
        }
    }
    return series_exp(lg);
}

namespace {

std::string render_factor_base(const ProductFactor& f) {
    std::ostringstream out;
    bool neg = false;
    Scalar c = f.coeff;
    if (c.is_rational() && sgn(c.rational_value()) < 0) {
        neg = true;
        c = -c;
    }
    std::vector<std::string> pieces;
    if (!c.is_one()) {
        std::string ctext = c.str();
        if (ctext.find(' ') != std::string::npos) ctext = "(" + ctext + ")";
        pieces.push_back(ctext);
    }
    for (const auto& [name, e] : f.params) {
        if (e == 0) continue;
        pieces.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    }
    if (sgn(f.qexp) != 0) {
        if (f.qexp == 1) pieces.push_back("q");
        else if (is_integer(f.qexp)) pieces.push_back("q^" + rat_str(f.qexp));
        else pieces.push_back("q^(" + rat_str(f.qexp) + ")");
    }
    if (pieces.empty()) pieces.push_back("1");
    for (size_t k = 0; k < pieces.size(); ++k) {
        if (k) out << "*";
        out << pieces[k];
    }
    return (neg ? "-" : "") + out.str();
}

std::string render_modulus(const Rational& m) {
    if (m == 1) return "q";
    if (is_integer(m)) return "q^" + rat_str(m);
    return "q^(" + rat_str(m) + ")";
}

} // namespace

std::string render_product(const ProductExpr& expr) {
    std::ostringstream out;
    for (size_t t = 0; t < expr.terms.size(); ++t) {
        if (t) out << " + ";
        const ProductTerm& term = expr.terms[t];
        bool first = true;
        if (!term.weight.is_one() || term.factors.empty()) {
            out << term.weight.str();
            first = false;
        }
        // Consecutive factors sharing modulus and power render as one group.
        size_t k = 0;
        while (k < term.factors.size()) {
            size_t end = k + 1;
            while (end < term.factors.size() &&
                   term.factors[end].modulus == term.factors[k].modulus &&
                   term.factors[end].power == term.factors[k].power)
                ++end;
            if (!first) out << " * ";
            first = false;
            out << "(";
            for (size_t j = k; j < end; ++j) {
                if (j > k) out << ", ";
                out << render_factor_base(term.factors[j]);
            }
            out << "; " << render_modulus(term.factors[k].modulus) << ")";
            if (term.factors[k].power != 1) out << "^" << term.factors[k].power;
            k = end;
        }
    }
    return out.str();
}

namespace {

using detail::Cursor;

// Extended monomial: scalar parts, parameter names, and q powers.
void parse_base_into(Cursor& c, ProductFactor& f) {
    bool neg = false;
    if (c.peek() == '-') {
        c.eat('-');
        neg = true;
    }
    bool saw_any = false;
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (ch == '(') {
            c.eat('(');
            f.coeff = f.coeff * detail::parse_scalar_at(c);
            c.expect(')');
            saw_any = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            f.coeff = f.coeff * Scalar(detail::parse_rational_at(c));
            saw_any = true;
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::string name = c.ident();
            if (name == "q") {
                Rational ex(1);
                if (c.eat('^')) ex = detail::parse_exponent_at(c);
                f.qexp += ex;
            } else {
                long e = 1;
                if (c.eat('^')) e = to_long(detail::parse_exponent_at(c));
                Scalar alias;
                if (detail::scalar_alias(name, alias)) {
                    f.coeff = f.coeff * alias.pow(e);
                } else {
                    f.params[name] += e;
                    if (f.params[name] == 0) f.params.erase(name);
                }
            }
            saw_any = true;
        } else {
            break;
        }
        if (!c.eat('*')) break;
    }
    if (!saw_any) raise(ErrorKind::ParseError, "empty factor base in \"" + c.s + "\"");
    if (neg) f.coeff = -f.coeff;
}

// "(b1, b2, ...; q^n)^r" appended to the term.
void parse_group(Cursor& c, ProductTerm& term) {
    c.expect('(');
    std::vector<ProductFactor> bases;
    while (true) {
        ProductFactor f;
        parse_base_into(c, f);
        bases.push_back(std::move(f));
        if (!c.eat(',')) break;
    }
    c.expect(';');
    ProductFactor probe;
    parse_base_into(c, probe);
    if (!probe.coeff.is_one() || !probe.params.empty() || sgn(probe.qexp) <= 0)
        raise(ErrorKind::ParseError, "modulus must be a positive power of q in \"" + c.s + "\"");
    c.expect(')');
    int power = 1;
    if (c.eat('^')) power = static_cast<int>(to_long(detail::parse_exponent_at(c)));
    for (auto& f : bases) {
        f.modulus = probe.qexp;
        f.power = power;
        term.factors.push_back(std::move(f));
    }
}

ProductTerm parse_term(Cursor& c) {
    ProductTerm term;
    ProductFactor weight_acc; // scalar and q parts multiply into the weight
    bool any_weight = false;
    bool lead_neg = false;
    if (c.peek() == '-') {
        c.eat('-');
        lead_neg = true;
    }
    while (true) {
        c.skip_ws();
        if (c.peek() == '(') {
            // A '(' may open a factor group or a parenthesized scalar weight;
            // groups always contain ';'.
            size_t save = c.pos;
            int depth = 0;
            bool group = false;
            for (size_t p = c.pos; p < c.s.size(); ++p) {
                if (c.s[p] == '(') ++depth;
                else if (c.s[p] == ')') {
                    if (--depth == 0) break;
                } else if (c.s[p] == ';' && depth == 1) {
                    group = true;
                    break;
                }
            }
            c.pos = save;
            if (group) {
                parse_group(c, term);
            } else {
                c.eat('(');
                weight_acc.coeff = weight_acc.coeff * detail::parse_scalar_at(c);
                c.expect(')');
                any_weight = true;
            }
        } else {
            parse_base_into(c, weight_acc);
            any_weight = true;
        }
        if (!c.eat('*')) break;
    }
    if (any_weight || lead_neg) {
        if (!weight_acc.params.empty())
            raise(ErrorKind::ParseError, "term weight cannot carry parameters");
        Scalar wc = lead_neg ? -weight_acc.coeff : weight_acc.coeff;
        term.weight = Monomial(wc, weight_acc.qexp);
    }
    if (term.factors.empty() && !any_weight)
        raise(ErrorKind::ParseError, "empty product term in \"" + c.s + "\"");
    return term;
}

} // namespace

ProductExpr parse_product(const std::string& text) {
    Cursor c(text);
    ProductExpr expr;
    expr.terms.push_back(parse_term(c));
    while (!c.done()) {
        c.expect('+');
        expr.terms.push_back(parse_term(c));
    }
    return expr;
}

} // namespace qrsid
