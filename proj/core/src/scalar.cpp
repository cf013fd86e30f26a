#include "qrsid/scalar.hpp"

#include <sstream>

namespace qrsid {

namespace {

// Coordinates of z12^k for k = 0..11; z^4 = z^2 - 1, z^6 = -1.
const int kRootTable[12][4] = {
    {1, 0, 0, 0},  {0, 1, 0, 0},  {0, 0, 1, 0},  {0, 0, 0, 1},
    {-1, 0, 1, 0}, {0, -1, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0},
    {0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1},
};

} // namespace

Scalar Scalar::zeta12() { return root_of_unity(1); }
Scalar Scalar::i_unit() { return root_of_unity(3); }
Scalar Scalar::zeta3() { return root_of_unity(4); }
Scalar Scalar::zeta6() { return root_of_unity(2); }

Scalar Scalar::root_of_unity(long k) {
    long m = ((k % 12) + 12) % 12;
    const int* row = kRootTable[m];
    return Scalar(rat(row[0]), rat(row[1]), rat(row[2]), rat(row[3]));
}

bool Scalar::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_one() const {
    return c_[0] == 1 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool Scalar::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

const Rational& Scalar::rational_value() const {
    if (!is_rational()) raise(ErrorKind::Internal, "scalar is not rational: " + str());
    return c_[0];
}

Scalar Scalar::operator-() const { return Scalar(-c_[0], -c_[1], -c_[2], -c_[3]); }

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]);
}

Scalar Scalar::operator*(const Scalar& o) const {
    // Fast paths: purely rational factors need a single multiplication.
    if (is_rational()) {
        if (sgn(c_[0]) == 0) return Scalar();
        return Scalar(c_[0] * o.c_[0], c_[0] * o.c_[1], c_[0] * o.c_[2], c_[0] * o.c_[3]);
    }
    if (o.is_rational()) {
        if (sgn(o.c_[0]) == 0) return Scalar();
        return Scalar(c_[0] * o.c_[0], c_[1] * o.c_[0], c_[2] * o.c_[0], c_[3] * o.c_[0]);
    }
    Rational acc[7];
    for (int a = 0; a < 4; ++a) {
        if (sgn(c_[a]) == 0) continue;
        for (int b = 0; b < 4; ++b) {
            if (sgn(o.c_[b]) == 0) continue;
            acc[a + b] += c_[a] * o.c_[b];
        }
    }
    // Reduce z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
    acc[2] += acc[4];
    acc[0] -= acc[4];
    acc[3] += acc[5];
    acc[1] -= acc[5];
    acc[0] -= acc[6];
    return Scalar(acc[0], acc[1], acc[2], acc[3]);
}

Scalar Scalar::inverse() const {
    if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero scalar");
    if (is_rational()) return Scalar(Rational(1) / c_[0]);
    // Solve M x = e0 where M is multiplication by *this in the z-power basis.
    Rational m[4][5];
    for (int j = 0; j < 4; ++j) {
        Scalar col = *this * root_of_unity(j);
        for (int r = 0; r < 4; ++r) m[r][j] = col.coord(r);
    }
    m[0][4] = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int r = col; r < 4; ++r) {
            if (sgn(m[r][col]) != 0) { pivot = r; break; }
        }
        if (pivot < 0) raise(ErrorKind::DivisionByZero, "singular multiplication matrix");
        if (pivot != col)
            for (int c = 0; c <= 4; ++c) std::swap(m[pivot][c], m[col][c]);
        Rational inv = Rational(1) / m[col][col];
        for (int c = col; c <= 4; ++c) m[col][c] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational f = m[r][col];
            for (int c = col; c <= 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return Scalar(m[0][4], m[1][4], m[2][4], m[3][4]);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) raise(ErrorKind::DivisionByZero, "scalar division by zero");
    if (o.is_rational()) {
        Rational inv = Rational(1) / o.c_[0];
        return Scalar(c_[0] * inv, c_[1] * inv, c_[2] * inv, c_[3] * inv);
    }
    return *this * o.inverse();
}

Scalar Scalar::conj() const {
    // z -> z^11 maps the basis to (1, z - z^3, 1 - z^2, -z^3).
    return Scalar(c_[0] + c_[2], c_[1], -c_[2], -c_[1] - c_[3]);
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return one();
    if (e < 0) return inverse().pow(-e);
    if (is_zero()) return zero();
    Scalar base = *this;
    Scalar acc = one();
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::optional<std::pair<Rational, int>> Scalar::as_rational_times_root() const {
    if (is_zero()) return std::nullopt;
    for (int k = 0; k < 12; ++k) {
        Scalar t = *this * root_of_unity(-k);
        if (t.is_rational() && sgn(t.rational_value()) > 0)
            return std::make_pair(t.rational_value(), k);
    }
    return std::nullopt;
}

std::optional<Scalar> Scalar::sqrt_in_field() const {
    if (is_zero()) return zero();
    auto decomp = as_rational_times_root();
    if (!decomp) return std::nullopt;
    auto [r, k] = *decomp;
    if (k % 2 != 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den().get_mpz_t());
    Rational root(num, den);
    root.canonicalize();
    return Scalar(root) * root_of_unity(k / 2);
}

std::string Scalar::str() const {
    if (is_rational()) return rat_str(c_[0]);
    if (*this == i_unit()) return "i";
    if (*this == -i_unit()) return "-i";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (sgn(c_[k]) == 0) continue;
        bool neg = sgn(c_[k]) < 0;
        Rational mag = neg ? Rational(-c_[k]) : c_[k];
        std::string body;
        if (k == 0) {
            body = rat_str(mag);
        } else {
            std::string zpart = (k == 1) ? "z12" : ("z12^" + std::to_string(k));
            body = (mag == 1) ? zpart : rat_str(mag) + "*" + zpart;
        }
        if (first) {
            out << (neg ? "-" : "") << body;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << body;
        }
    }
    return out.str();
}

Scalar unit_power(long n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return Scalar::one();
        case 1: return Scalar::i_unit();
        case 2: return -Scalar::one();
        default: return -Scalar::i_unit();
    }
}

} // namespace qrsid
