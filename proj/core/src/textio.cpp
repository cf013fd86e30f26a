#include <numeric>
#include <sstream>
#include <vector>

#include "qrsid/monomial.hpp"
#include "qrsid/qseries.hpp"
#include "text_cursor.hpp"

namespace qrsid {

using detail::Cursor;

Rational parse_rational(const std::string& text) {
    Cursor c(text);
    Rational r = detail::parse_rational_at(c);
    if (!c.done()) raise(ErrorKind::ParseError, "trailing input in rational \"" + text + "\"");
    return r;
}

Scalar parse_scalar(const std::string& text) {
    Cursor c(text);
    Scalar s = detail::parse_scalar_at(c);
    if (!c.done()) raise(ErrorKind::ParseError, "trailing input in scalar \"" + text + "\"");
    return s;
}

std::string Monomial::str() const {
    if (is_zero()) return "0";
    std::string cpart = coeff.str();
    bool needs_parens = cpart.find(' ') != std::string::npos;
    if (needs_parens) cpart = "(" + cpart + ")";
    if (sgn(qexp) == 0) return cpart;
    std::string qpart;
    if (qexp == 1) qpart = "q";
    else if (is_integer(qexp)) qpart = "q^" + rat_str(qexp);
    else qpart = "q^(" + rat_str(qexp) + ")";
    if (coeff.is_one()) return qpart;
    if (coeff == -Scalar::one()) return "-" + qpart;
    return cpart + "*" + qpart;
}

Monomial parse_monomial(const std::string& text) {
    Cursor c(text);
    bool neg = false;
    if (c.peek() == '-') {
        c.eat('-');
        neg = true;
    }
    Scalar coeff = Scalar::one();
    Rational e(0);
    bool saw_any = false;
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (ch == 'q') {
            size_t save = c.pos;
            ++c.pos;
            if (c.pos < c.s.size() &&
                (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) || c.s[c.pos] == '_')) {
                c.pos = save;
                raise(ErrorKind::ParseError, "unknown symbol in monomial \"" + text + "\"");
            }
            Rational ex(1);
            if (c.eat('^')) ex = detail::parse_exponent_at(c);
            e += ex;
            saw_any = true;
        } else if (ch == '(') {
            c.eat('(');
            coeff = coeff * detail::parse_scalar_at(c);
            c.expect(')');
            saw_any = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
                   std::isalpha(static_cast<unsigned char>(ch))) {
            coeff = coeff * detail::parse_scalar_term(c);
            saw_any = true;
        } else {
            break;
        }
        if (!c.eat('*')) break;
    }
    if (!saw_any) raise(ErrorKind::ParseError, "empty monomial \"" + text + "\"");
    if (!c.done()) raise(ErrorKind::ParseError, "trailing input in monomial \"" + text + "\"");
    Scalar s = neg ? -coeff : coeff;
    return Monomial(s, e);
}

namespace {

// One series term: [sign] piece, piece := coef | qpart | coef '*' qpart.
void parse_series_term(Cursor& c, bool neg, std::vector<std::pair<Rational, Scalar>>& terms) {
    Scalar coeff = Scalar::one();
    Rational e(0);
    bool saw_any = false;
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (ch == 'q') {
            c.eat('q');
            Rational ex(1);
            if (c.eat('^')) ex = detail::parse_exponent_at(c);
            e += ex;
            saw_any = true;
        } else if (ch == '(') {
            c.eat('(');
            coeff = coeff * detail::parse_scalar_at(c);
            c.expect(')');
            saw_any = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
                   std::isalpha(static_cast<unsigned char>(ch))) {
            coeff = coeff * detail::parse_scalar_term(c);
            saw_any = true;
        } else {
            break;
        }
        if (!c.eat('*')) break;
    }
    if (!saw_any) raise(ErrorKind::ParseError, "empty series term");
    terms.emplace_back(e, neg ? -coeff : coeff);
}

} // namespace

QSeries parse_series(const std::string& text) {
    Cursor c(text);
    std::vector<std::pair<Rational, Scalar>> terms;
    bool neg = c.eat('-');
    if (!neg) c.eat('+');
    parse_series_term(c, neg, terms);
    while (!c.done()) {
        if (c.eat('+')) neg = false;
        else if (c.eat('-')) neg = true;
        else raise(ErrorKind::ParseError, "expected '+' or '-' in series \"" + text + "\"");
        parse_series_term(c, neg, terms);
    }
    long grid = 1;
    Rational cap(0);
    for (const auto& [e, s] : terms) {
        Rational red = e;
        red.canonicalize();
        grid = std::lcm<long>(grid, red.get_den().get_si());
        cap = std::max(cap, e);
    }
    QSeries out(static_cast<int>(grid), cap);
    for (const auto& [e, s] : terms) out.add_term(to_long(e * grid), s);
    return out;
}

} // namespace qrsid
