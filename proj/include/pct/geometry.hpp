#pragma once

#include "pct/field.hpp"

#include <optional>
#include <vector>

namespace pct {

struct Point {
    FieldScalar x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point scaled(const FieldScalar& s) const { return {x * s, y * s}; }
};

// Nonzero displacement; predicates are homogeneous, no normalization.
struct Direction {
    FieldScalar dx, dy;
};

struct Segment {
    Point p, q;
};

inline FieldScalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline FieldScalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

inline FieldScalar squared_distance(const Point& p, const Point& q) {
    const Point d = p - q;
    return d.x * d.x + d.y * d.y;
}

// Sign of the signed area of (a, b, c): +1 = counter-clockwise.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a).sign();
}

// Lexicographic (x, y) order; ties decided exactly.
inline int compare_points(const Point& p, const Point& q) {
    const int sx = (p.x - q.x).sign();
    if (sx != 0) return sx;
    return (p.y - q.y).sign();
}

// p strictly inside the open segment (a, b); requires a != b.
bool strictly_on_segment(const Point& a, const Point& b, const Point& p);
// p on the closed segment [a, b].
bool on_closed_segment(const Point& a, const Point& b, const Point& p);

// Do the closed segments share a point? `proper` reports a transversal
// interior crossing.
struct SegInter {
    bool touch = false;
    bool proper = false;
};
SegInter segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// Angular position of a nonzero vector: half 0 covers angles in [0, pi)
// starting at the +x axis, half 1 covers [pi, 2pi).
int angular_half(const Point& v);
// Counter-clockwise order of nonzero vectors around the origin starting at +x.
int compare_angular(const Point& u, const Point& v);
// Is w strictly inside the ccw wedge from u to v (u, v nonzero, not equal in direction)?
bool strictly_in_ccw_wedge(const Point& u, const Point& v, const Point& w);
inline bool same_direction(const Point& u, const Point& v) {
    return cross(u, v).is_zero() && dot(u, v).sign() > 0;
}

enum class PolyLocation { Outside, Inside, OnBoundary };
// Simple polygon given as a vertex loop (either orientation).
PolyLocation locate_in_polygon(const std::vector<Point>& poly, const Point& p);

// Twice the signed area; > 0 for counter-clockwise loops.
FieldScalar polygon_double_area(const std::vector<Point>& poly);
bool polygon_is_simple(const std::vector<Point>& poly);

struct Box {
    Point lo, hi;
};
Box bounding_box(const std::vector<Point>& poly);
// Squared distance between two axis-aligned boxes (0 if they meet).
FieldScalar box_gap_sq(const Box& a, const Box& b);
bool box_intersects(const Box& a, const Box& b);
// Closed polygon vs closed box.
bool polygon_intersects_box(const std::vector<Point>& poly, const Box& box);

}  // namespace pct
