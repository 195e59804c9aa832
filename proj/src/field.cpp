#include "pct/field.hpp"

#include <ostream>
#include <sstream>

namespace pct {

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw std::domain_error("FieldScalar::inverse: zero");
    // Multiply by the three nontrivial Galois conjugates; the product of all
    // four conjugates is the rational field norm.
    const FieldScalar s1{a, -b, c, -d};   // sqrt2 -> -sqrt2
    const FieldScalar s2{a, b, -c, -d};   // sqrt3 -> -sqrt3
    const FieldScalar s3{a, -b, -c, d};   // both negated
    const FieldScalar num = s1 * s2 * s3;
    const FieldScalar norm = *this * num;
    if (!norm.is_rational() || norm.a == 0) throw std::logic_error("field norm not rational");
    const Rational inv = 1 / norm.a;
    return {num.a * inv, num.b * inv, num.c * inv, num.d * inv};
}

RationalInterval FieldScalar::enclosure(unsigned bits) const {
    // Pad so that the sum of four terms still meets the requested width.
    const unsigned k = bits + 3;
    RationalInterval acc = RationalInterval::point(a);
    if (b != 0) acc = acc + sqrt_enclosure(Rational(2), k).scaled(b);
    if (c != 0) acc = acc + sqrt_enclosure(Rational(3), k).scaled(c);
    if (d != 0) acc = acc + sqrt_enclosure(Rational(6), k).scaled(d);
    return acc;
}

namespace {

// Sign of p + q*sqrt2, exact.
int sign_q2(const Rational& p, const Rational& q) {
    const int sp = sign_of(p), sq = sign_of(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: compare p^2 against 2 q^2. Equality would make sqrt2
    // rational, so the comparison is strict.
    const int t = sign_of(Rational(p * p - 2 * q * q));
    return sp * t;
}

}  // namespace

int field_sign_exact(const FieldScalar& x) {
    // x = X + Y*sqrt3 with X = a + b*sqrt2, Y = c + d*sqrt2.
    const int sx = sign_q2(x.a, x.b);
    const int sy = sign_q2(x.c, x.d);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite: sign is that of X^2 - 3 Y^2 times sign(X).
    // X^2 - 3Y^2 = (a^2 + 2b^2 - 3c^2 - 6d^2) + (2ab - 6cd) sqrt2.
    const Rational p = x.a * x.a + 2 * x.b * x.b - 3 * x.c * x.c - 6 * x.d * x.d;
    const Rational q = 2 * (x.a * x.b - 3 * x.c * x.d);
    const int t = sign_q2(p, q);
    if (t == 0) throw std::logic_error("field_sign_exact: degenerate tower");
    return sx * t;
}

int FieldScalar::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sign_of(a);
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        const int s = enclosure(bits).definite_sign();
        if (s != 0) return s;
    }
    // A nonzero element is bounded away from zero, so refinement terminates in
    // practice well before the cap; the algebraic fallback keeps this total.
    return field_sign_exact(*this);
}

std::string format_rational(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& token) {
    const auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(token));
        const Int num(token.substr(0, slash));
        const Int den(token.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("nonpositive denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational token: " + token);
    }
}

std::string format_field(const FieldScalar& x) {
    return format_rational(x.a) + " " + format_rational(x.b) + " " + format_rational(x.c) +
           " " + format_rational(x.d);
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) {
    return os << format_field(x);
}

}  // namespace pct
