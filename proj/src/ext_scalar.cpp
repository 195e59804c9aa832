#include "pct/ext_scalar.hpp"

#include <stdexcept>

namespace pct {

namespace {

// Sign of alpha + beta*sqrt(D), all in the field, D >= 0.
int ext_sign_impl(const FieldScalar& alpha, const FieldScalar& beta, const FieldScalar& D) {
    const int sd = D.sign();
    if (sd < 0) throw std::domain_error("ExtScalar: negative discriminant");
    const int sa = alpha.sign();
    if (sd == 0 || beta.is_zero()) return sa;
    const int sb = beta.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |alpha| vs |beta|*sqrt(D) decided by squaring.
    const int t = (alpha * alpha - beta * beta * D).sign();
    return t == 0 ? 0 : sa * t;
}

}  // namespace

int ExtScalar::sign() const { return ext_sign_impl(alpha, beta, disc); }

RationalInterval ExtScalar::enclosure(unsigned bits) const {
    const unsigned k = bits + 4;
    RationalInterval acc = alpha.enclosure(k);
    if (!beta.is_zero() && !disc.is_zero()) {
        const RationalInterval di = disc.enclosure(k);
        const Rational lo = di.lo < 0 ? Rational(0) : di.lo;
        RationalInterval root(sqrt_enclosure(lo, k).lo, sqrt_enclosure(di.hi, k).hi);
        acc = acc + root * beta.enclosure(k);
    }
    return acc;
}

double ExtScalar::approx() const { return to_double(enclosure(64).midpoint()); }

namespace {

void require_same_disc(const ExtScalar& x, const ExtScalar& y) {
    if (x.beta.is_zero() || x.disc.is_zero() || y.beta.is_zero() || y.disc.is_zero()) return;
    if (x.disc != y.disc) throw std::logic_error("ExtScalar: mixed discriminants");
}

const FieldScalar& pick_disc(const ExtScalar& x, const ExtScalar& y) {
    if (!x.beta.is_zero() && !x.disc.is_zero()) return x.disc;
    return y.disc;
}

}  // namespace

ExtScalar ExtScalar::operator+(const ExtScalar& o) const {
    require_same_disc(*this, o);
    return {alpha + o.alpha, beta + o.beta, pick_disc(*this, o)};
}

ExtScalar ExtScalar::operator-(const ExtScalar& o) const {
    require_same_disc(*this, o);
    return {alpha - o.alpha, beta - o.beta, pick_disc(*this, o)};
}

ExtScalar ExtScalar::operator*(const ExtScalar& o) const {
    require_same_disc(*this, o);
    const FieldScalar& D = pick_disc(*this, o);
    return {alpha * o.alpha + beta * o.beta * D, alpha * o.beta + beta * o.alpha, D};
}

ExtScalar ext_add_field(const ExtScalar& x, const FieldScalar& f) {
    return {x.alpha + f, x.beta, x.disc};
}

ExtScalar ext_scale_field(const ExtScalar& x, const FieldScalar& f) {
    return {x.alpha * f, x.beta * f, x.disc};
}

int mixed_sign(const FieldScalar& a, const FieldScalar& b1, const FieldScalar& D1,
               const FieldScalar& b2, const FieldScalar& D2) {
    if (b1.is_zero() || D1.is_zero()) return ext_sign_impl(a, b2, D2);
    if (b2.is_zero() || D2.is_zero()) return ext_sign_impl(a, b1, D1);
    // X = a + b1 sqrt(D1), Y = b2 sqrt(D2); sign(X + Y) by squaring once:
    // X^2 - Y^2 lives in the first extension.
    const int sx = ext_sign_impl(a, b1, D1);
    const int sy = b2.sign();  // sqrt(D2) > 0 here
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // X^2 - Y^2 = (a^2 + b1^2 D1 - b2^2 D2) + (2 a b1) sqrt(D1)
    const FieldScalar alpha = a * a + b1 * b1 * D1 - b2 * b2 * D2;
    const FieldScalar beta = a * b1 * 2;
    const int t = ext_sign_impl(alpha, beta, D1);
    return t == 0 ? 0 : sx * t;
}

int orientation_ext(const Point& a, const Point& b, const QuadPoint& p) {
    const FieldScalar ux = b.x - a.x, uy = b.y - a.y;
    // cross(u, p - a) = ux*(p.y - a.y) - uy*(p.x - a.x), linear in p.
    const ExtScalar vx = ext_add_field(p.x, -a.x);
    const ExtScalar vy = ext_add_field(p.y, -a.y);
    const ExtScalar c = ext_scale_field(vy, ux) - ext_scale_field(vx, uy);
    return c.sign();
}

bool strictly_on_segment_ext(const Point& a, const Point& b, const QuadPoint& p) {
    if (orientation_ext(a, b, p) != 0) return false;
    const FieldScalar ux = b.x - a.x, uy = b.y - a.y;
    const ExtScalar vx = ext_add_field(p.x, -a.x);
    const ExtScalar vy = ext_add_field(p.y, -a.y);
    const ExtScalar t = ext_scale_field(vx, ux) + ext_scale_field(vy, uy);
    if (t.sign() <= 0) return false;
    const FieldScalar len2 = ux * ux + uy * uy;
    return (ext_add_field(-t, len2)).sign() > 0;
}

bool quadpoint_equals_point(const QuadPoint& p, const Point& q) {
    if (ext_add_field(p.x, -q.x).sign() != 0) return false;
    return ext_add_field(p.y, -q.y).sign() == 0;
}

bool quadpoints_equal(const QuadPoint& p, const QuadPoint& q) {
    if (mixed_sign(p.x.alpha - q.x.alpha, p.x.beta, p.x.disc, -q.x.beta, q.x.disc) != 0)
        return false;
    return mixed_sign(p.y.alpha - q.y.alpha, p.y.beta, p.y.disc, -q.y.beta, q.y.disc) == 0;
}

ExtScalar squared_distance_ext(const QuadPoint& p, const QuadPoint& q) {
    const ExtScalar dx = p.x - q.x;
    const ExtScalar dy = p.y - q.y;
    return dx * dx + dy * dy;
}

PolyLocation locate_in_polygon_ext(const std::vector<Point>& poly, const QuadPoint& p) {
    const size_t n = poly.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (quadpoint_equals_point(p, a) || strictly_on_segment_ext(a, b, p))
            return PolyLocation::OnBoundary;
        const bool a_below = ext_add_field(-p.y, a.y).sign() <= 0;
        const bool b_below = ext_add_field(-p.y, b.y).sign() <= 0;
        if (a_below && !b_below) {
            if (orientation_ext(a, b, p) > 0) inside = !inside;
        } else if (!a_below && b_below) {
            if (orientation_ext(a, b, p) < 0) inside = !inside;
        }
    }
    return inside ? PolyLocation::Inside : PolyLocation::Outside;
}

}  // namespace pct
