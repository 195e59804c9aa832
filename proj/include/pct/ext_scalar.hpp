#pragma once

#include "pct/geometry.hpp"

namespace pct {

// alpha + beta * sqrt(disc), with alpha, beta, disc in the coordinate field and
// disc >= 0. Circle-segment intersection points live here: the field is closed
// under everything except the one square root of the quadratic's discriminant.
struct ExtScalar {
    FieldScalar alpha;
    FieldScalar beta;
    FieldScalar disc;

    ExtScalar() : alpha(0), beta(0), disc(0) {}
    ExtScalar(FieldScalar a) : alpha(std::move(a)), beta(0), disc(0) {}  // NOLINT
    ExtScalar(FieldScalar a, FieldScalar b, FieldScalar D)
        : alpha(std::move(a)), beta(std::move(b)), disc(std::move(D)) {}

    bool is_field_value() const { return beta.is_zero() || disc.is_zero(); }
    FieldScalar field_value() const { return alpha; }  // valid when is_field_value()

    int sign() const;
    double approx() const;

    // Same-extension arithmetic; mixing distinct nonzero discriminants is a bug.
    ExtScalar operator+(const ExtScalar& o) const;
    ExtScalar operator-(const ExtScalar& o) const;
    ExtScalar operator*(const ExtScalar& o) const;
    ExtScalar operator-() const { return {-alpha, -beta, disc}; }

    RationalInterval enclosure(unsigned bits) const;
};

ExtScalar ext_add_field(const ExtScalar& x, const FieldScalar& f);
ExtScalar ext_scale_field(const ExtScalar& x, const FieldScalar& f);

// Sign of a + b1*sqrt(D1) + b2*sqrt(D2), exact. Needed when comparing values
// that live in two different quadratic extensions of the field.
int mixed_sign(const FieldScalar& a, const FieldScalar& b1, const FieldScalar& D1,
               const FieldScalar& b2, const FieldScalar& D2);

// Point with coordinates in one shared quadratic extension.
struct QuadPoint {
    ExtScalar x, y;

    static QuadPoint exact(const Point& p) { return {ExtScalar(p.x), ExtScalar(p.y)}; }
    bool is_field_point() const { return x.is_field_value() && y.is_field_value(); }
    Point field_point() const { return {x.field_value(), y.field_value()}; }
};

// (b - a) x (p - a) with field endpoints a, b; exact side-of-line test.
int orientation_ext(const Point& a, const Point& b, const QuadPoint& p);
// p strictly inside the open segment (a, b); assumes p is known collinear or not.
bool strictly_on_segment_ext(const Point& a, const Point& b, const QuadPoint& p);
bool quadpoint_equals_point(const QuadPoint& p, const Point& q);
// Exact equality of two quad points from possibly different extensions.
bool quadpoints_equal(const QuadPoint& p, const QuadPoint& q);

// |p - q|^2 for points sharing one extension.
ExtScalar squared_distance_ext(const QuadPoint& p, const QuadPoint& q);

// Crossing-number point-in-polygon for a quad point against a field polygon.
PolyLocation locate_in_polygon_ext(const std::vector<Point>& poly, const QuadPoint& p);

}  // namespace pct
