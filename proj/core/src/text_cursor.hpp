#pragma once

// Internal recursive-descent helpers shared by the text parsers. Not installed.

#include <cctype>
#include <string>

#include "qrsid/scalar.hpp"

namespace qrsid::detail {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    explicit Cursor(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            raise(ErrorKind::ParseError, std::string("expected '") + c + "' at offset " +
                                             std::to_string(pos) + " in \"" + s + "\"");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos)
            raise(ErrorKind::ParseError, "expected identifier at offset " + std::to_string(start) +
                                             " in \"" + s + "\"");
        return s.substr(start, pos - start);
    }
};

inline Rational parse_rational_at(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
    size_t digits = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        ++c.pos;
        ++digits;
    }
    if (digits == 0)
        raise(ErrorKind::ParseError,
              "expected number at offset " + std::to_string(start) + " in \"" + c.s + "\"");
    std::string num = c.s.substr(start, c.pos - start);
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        size_t dstart = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        if (dstart == c.pos)
            raise(ErrorKind::ParseError, "expected denominator at offset " + std::to_string(dstart));
        std::string den = c.s.substr(dstart, c.pos - dstart);
        if (den.find_first_not_of('0') == std::string::npos)
            raise(ErrorKind::ParseError, "zero denominator in \"" + c.s + "\"");
        Rational r(num + "/" + den);
        r.canonicalize();
        return r;
    }
    Rational r(num);
    r.canonicalize();
    return r;
}

// Exponent after '^': a bare (possibly signed) integer or "(p/d)".
inline Rational parse_exponent_at(Cursor& c) {
    if (c.eat('(')) {
        Rational e = parse_rational_at(c);
        c.expect(')');
        return e;
    }
    return parse_rational_at(c);
}

/// Looks up a root-of-unity alias; returns false for other identifiers.
inline bool scalar_alias(const std::string& name, Scalar& out) {
    if (name == "i") out = Scalar::i_unit();
    else if (name == "z2") out = -Scalar::one();
    else if (name == "z3") out = Scalar::zeta3();
    else if (name == "z4") out = Scalar::i_unit();
    else if (name == "z6") out = Scalar::zeta6();
    else if (name == "z12") out = Scalar::zeta12();
    else return false;
    return true;
}

// One scalar product term: [sign] (rational | alias[^k]) ('*' ...)*.
inline Scalar parse_scalar_term(Cursor& c) {
    Scalar value = Scalar::one();
    bool have_any = false;
    bool neg = false;
    if (c.peek() == '-') {
        c.eat('-');
        neg = true;
    } else {
        c.eat('+');
    }
    while (true) {
        c.skip_ws();
        char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            value = value * Scalar(parse_rational_at(c));
            have_any = true;
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            size_t save = c.pos;
            std::string name = c.ident();
            Scalar base;
            if (!scalar_alias(name, base)) {
                c.pos = save;
                break;
            }
            long e = 1;
            if (c.eat('^')) e = to_long(parse_exponent_at(c));
            value = value * base.pow(e);
            have_any = true;
        } else {
            break;
        }
        // Only swallow '*' when a scalar piece follows; otherwise the factor
        // belongs to the caller (q powers, parameter names).
        size_t after_piece = c.pos;
        if (!c.eat('*')) break;
        c.skip_ws();
        char nx = c.pos < c.s.size() ? c.s[c.pos] : '\0';
        bool continues = std::isdigit(static_cast<unsigned char>(nx)) != 0;
        if (std::isalpha(static_cast<unsigned char>(nx))) {
            size_t probe = c.pos;
            std::string name = c.ident();
            Scalar tmp;
            continues = scalar_alias(name, tmp);
            c.pos = probe;
        }
        if (!continues) {
            c.pos = after_piece;
            break;
        }
    }
    if (!have_any) raise(ErrorKind::ParseError, "expected scalar term in \"" + c.s + "\"");
    return neg ? -value : value;
}

inline Scalar parse_scalar_at(Cursor& c) {
    Scalar total = parse_scalar_term(c);
    while (true) {
        char ch = c.peek();
        if (ch != '+' && ch != '-') break;
        total = total + parse_scalar_term(c);
    }
    return total;
}

} // namespace qrsid::detail
