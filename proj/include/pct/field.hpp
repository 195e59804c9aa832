#pragma once

#include "pct/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace pct {

// Element of Q(sqrt2, sqrt3): a + b*sqrt2 + c*sqrt3 + d*sqrt6.
// The representation is unique: the value is 0 iff a = b = c = d = 0,
// since {1, sqrt2, sqrt3, sqrt6} are linearly independent over Q.
struct FieldScalar {
    Rational a, b, c, d;

    FieldScalar() : a(0), b(0), c(0), d(0) {}
    FieldScalar(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    FieldScalar(int v) : a(v), b(0), c(0), d(0) {}                   // NOLINT(google-explicit-constructor)
    FieldScalar(const Rational& v) : a(v), b(0), c(0), d(0) {}       // NOLINT(google-explicit-constructor)

    static FieldScalar sqrt2() { return {0, 1, 0, 0}; }
    static FieldScalar sqrt3() { return {0, 0, 1, 0}; }
    static FieldScalar sqrt6() { return {0, 0, 0, 1}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    bool operator==(const FieldScalar& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    FieldScalar operator+(const FieldScalar& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    FieldScalar operator-(const FieldScalar& o) const {
        return {a - o.a, b - o.b, c - o.c, d - o.d};
    }
    FieldScalar operator-() const { return {-a, -b, -c, -d}; }

    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3, sqrt3*sqrt6 = 3*sqrt2.
    FieldScalar operator*(const FieldScalar& o) const {
        return {a * o.a + 2 * (b * o.b) + 3 * (c * o.c) + 6 * (d * o.d),
                a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
                a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
                a * o.d + d * o.a + b * o.c + c * o.b};
    }

    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    FieldScalar inverse() const;
    FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

    // Sign of the real value: 0 iff all coefficients are 0 (syntactic test),
    // nonzero elements decided by interval refinement with doubling precision.
    int sign() const;

    // Interval containing the value, width <= 2^-bits.
    RationalInterval enclosure(unsigned bits) const;

    double approx() const { return to_double(enclosure(64).midpoint()); }

    bool operator<(const FieldScalar& o) const { return (*this - o).sign() < 0; }
    bool operator>(const FieldScalar& o) const { return (*this - o).sign() > 0; }
    bool operator<=(const FieldScalar& o) const { return (*this - o).sign() <= 0; }
    bool operator>=(const FieldScalar& o) const { return (*this - o).sign() >= 0; }
};

enum class ArithOp { Add, Sub, Mul, Neg };

inline FieldScalar field_arith(const FieldScalar& x, const FieldScalar& y, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return x + y;
        case ArithOp::Sub: return x - y;
        case ArithOp::Mul: return x * y;
        case ArithOp::Neg: return -x;
    }
    throw std::logic_error("field_arith: bad op");
}

inline int field_sign(const FieldScalar& x) { return x.sign(); }

inline RationalInterval field_enclosure(const FieldScalar& x, unsigned bits) {
    if (bits < 1) throw std::invalid_argument("field_enclosure: bits >= 1 required");
    return x.enclosure(bits);
}

// Exact sign by descending the quadratic tower Q(sqrt2,sqrt3) / Q(sqrt2) / Q.
// Used as the terminal fallback behind the interval loop and as a test oracle.
int field_sign_exact(const FieldScalar& x);

// Text form: four reduced fractions "a b c d"; integers omit the /1.
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& token);  // throws std::invalid_argument
std::string format_field(const FieldScalar& x);

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

}  // namespace pct
