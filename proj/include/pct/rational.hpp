#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pct {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps gcd(|num|, den) = 1 and den >= 1 by construction.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) { return x.sign(); }
inline int sign_of(const Int& x) { return x.sign(); }

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Closed rational interval [lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
    }
    static RationalInterval point(const Rational& x) { return RationalInterval(x, x); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    // Sign of every point in the interval; 0 if the interval straddles or touches zero.
    int definite_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }

    RationalInterval operator+(const RationalInterval& o) const {
        return RationalInterval(lo + o.lo, hi + o.hi);
    }
    RationalInterval operator-(const RationalInterval& o) const {
        return RationalInterval(lo - o.hi, hi - o.lo);
    }
    RationalInterval operator*(const RationalInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rational mn = a, mx = a;
        for (const Rational& v : {b, c, d}) {
            if (v < mn) mn = v;
            if (v > mx) mx = v;
        }
        return RationalInterval(mn, mx);
    }
    RationalInterval scaled(const Rational& r) const {
        return r >= 0 ? RationalInterval(lo * r, hi * r) : RationalInterval(hi * r, lo * r);
    }
};

// floor(sqrt(n)) for n >= 0.
inline Int floor_isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("floor_isqrt: negative");
    return boost::multiprecision::sqrt(n);
}

// Enclosure of sqrt(x) for rational x >= 0, width <= 2^-bits.
// sqrt(p/q) = sqrt(p*q)/q; enclose sqrt(p*q) between consecutive multiples of 2^-k.
inline RationalInterval sqrt_enclosure(const Rational& x, unsigned bits) {
    if (x < 0) throw std::domain_error("sqrt_enclosure: negative");
    if (x == 0) return RationalInterval(0, 0);
    const Int p = numerator(x), q = denominator(x);
    const Int n = p * q;
    const unsigned k = bits + 1;
    const Int scale = Int(1) << k;
    const Int m = floor_isqrt(n * scale * scale);
    // m/2^k <= sqrt(n) <= (m+1)/2^k, so dividing by q keeps width 1/(2^k q) <= 2^-bits.
    return RationalInterval(Rational(m, scale * q), Rational(m + 1, scale * q));
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace pct
