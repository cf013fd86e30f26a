#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qrsid/errors.hpp"

namespace qrsid {

/// Exact rational numbers. GMP keeps values in lowest terms with positive
/// denominator once canonicalized; every constructor here canonicalizes.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) raise(ErrorKind::DivisionByZero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
    if (!is_integer(r)) raise(ErrorKind::Internal, "expected integer rational");
    if (!r.get_num().fits_slong_p()) raise(ErrorKind::Internal, "integer out of range");
    return r.get_num().get_si();
}

/// Floor of a rational, as a long.
inline long rat_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    if (!q.fits_slong_p()) raise(ErrorKind::Internal, "floor out of range");
    return q.get_si();
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p", or "p/d". Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

} // namespace qrsid
