#include "pct/geometry.hpp"

#include <stdexcept>

namespace pct {

bool strictly_on_segment(const Point& a, const Point& b, const Point& p) {
    if (!cross(b - a, p - a).is_zero()) return false;
    // 0 < (p-a).(b-a) < |b-a|^2
    const FieldScalar t = dot(p - a, b - a);
    if (t.sign() <= 0) return false;
    return (dot(b - a, b - a) - t).sign() > 0;
}

bool on_closed_segment(const Point& a, const Point& b, const Point& p) {
    if (!cross(b - a, p - a).is_zero()) return false;
    const FieldScalar t = dot(p - a, b - a);
    if (t.sign() < 0) return false;
    return (dot(b - a, b - a) - t).sign() >= 0;
}

SegInter segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    SegInter r;
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        r.touch = r.proper = true;
        return r;
    }
    if (o1 != o2 && o3 != o4) {  // crossing with an endpoint on the other segment
        r.touch = true;
        return r;
    }
    if (o1 == 0 && on_closed_segment(a, b, c)) r.touch = true;
    if (o2 == 0 && on_closed_segment(a, b, d)) r.touch = true;
    if (o3 == 0 && on_closed_segment(c, d, a)) r.touch = true;
    if (o4 == 0 && on_closed_segment(c, d, b)) r.touch = true;
    return r;
}

int angular_half(const Point& v) {
    const int sy = v.y.sign();
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    const int sx = v.x.sign();
    if (sx == 0) throw std::invalid_argument("angular_half: zero vector");
    return sx > 0 ? 0 : 1;
}

int compare_angular(const Point& u, const Point& v) {
    const int hu = angular_half(u), hv = angular_half(v);
    if (hu != hv) return hu < hv ? -1 : 1;
    return -cross(u, v).sign();  // u before v iff v is ccw of u within the half
}

bool strictly_in_ccw_wedge(const Point& u, const Point& v, const Point& w) {
    // Wedge swept counter-clockwise from u to v.
    const int cuv = cross(u, v).sign();
    const int cuw = cross(u, w).sign();
    const int cwv = cross(w, v).sign();
    if (cuv > 0) return cuw > 0 && cwv > 0;
    if (cuv < 0) return cuw > 0 || cwv > 0;
    // u, v collinear: equal direction sweeps the full turn, opposite a half plane.
    if (dot(u, v).sign() > 0) return !same_direction(u, w);
    return cuw > 0;
}

PolyLocation locate_in_polygon(const std::vector<Point>& poly, const Point& p) {
    const size_t n = poly.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if (p == a || on_closed_segment(a, b, p)) return PolyLocation::OnBoundary;
        // Half-open crossing rule: an upward edge covers a.y <= p.y < b.y,
        // a downward edge covers b.y <= p.y < a.y.
        const bool a_below = (a.y - p.y).sign() <= 0;
        const bool b_below = (b.y - p.y).sign() <= 0;
        if (a_below && !b_below) {
            if (orientation(a, b, p) > 0) inside = !inside;
        } else if (!a_below && b_below) {
            if (orientation(a, b, p) < 0) inside = !inside;
        }
    }
    return inside ? PolyLocation::Inside : PolyLocation::Outside;
}

FieldScalar polygon_double_area(const std::vector<Point>& poly) {
    FieldScalar acc = 0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) acc += cross(poly[i], poly[(i + 1) % n]);
    return acc;
}

bool polygon_is_simple(const std::vector<Point>& poly) {
    const size_t n = poly.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (poly[i] == poly[j]) return false;  // loop points pairwise distinct
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point &a = poly[i], &b = poly[(i + 1) % n];
            const Point &c = poly[j], &d = poly[(j + 1) % n];
            const SegInter s = segments_intersect(a, b, c, d);
            if (adjacent) {
                if (s.proper) return false;
                if (strictly_on_segment(a, b, c) || strictly_on_segment(a, b, d) ||
                    strictly_on_segment(c, d, a) || strictly_on_segment(c, d, b))
                    return false;
            } else if (s.touch) {
                return false;
            }
        }
    }
    return true;
}

Box bounding_box(const std::vector<Point>& poly) {
    if (poly.empty()) throw std::invalid_argument("bounding_box: empty polygon");
    Box b{poly[0], poly[0]};
    for (const Point& p : poly) {
        if (p.x < b.lo.x) b.lo.x = p.x;
        if (p.y < b.lo.y) b.lo.y = p.y;
        if (p.x > b.hi.x) b.hi.x = p.x;
        if (p.y > b.hi.y) b.hi.y = p.y;
    }
    return b;
}

FieldScalar box_gap_sq(const Box& a, const Box& b) {
    FieldScalar dx = 0, dy = 0;
    if ((b.lo.x - a.hi.x).sign() > 0) dx = b.lo.x - a.hi.x;
    else if ((a.lo.x - b.hi.x).sign() > 0) dx = a.lo.x - b.hi.x;
    if ((b.lo.y - a.hi.y).sign() > 0) dy = b.lo.y - a.hi.y;
    else if ((a.lo.y - b.hi.y).sign() > 0) dy = a.lo.y - b.hi.y;
    return dx * dx + dy * dy;
}

bool box_intersects(const Box& a, const Box& b) {
    return (b.lo.x - a.hi.x).sign() <= 0 && (a.lo.x - b.hi.x).sign() <= 0 &&
           (b.lo.y - a.hi.y).sign() <= 0 && (a.lo.y - b.hi.y).sign() <= 0;
}

bool polygon_intersects_box(const std::vector<Point>& poly, const Box& box) {
    if (!box_intersects(bounding_box(poly), box)) return false;
    for (const Point& p : poly) {
        if ((p.x - box.lo.x).sign() >= 0 && (box.hi.x - p.x).sign() >= 0 &&
            (p.y - box.lo.y).sign() >= 0 && (box.hi.y - p.y).sign() >= 0)
            return true;
    }
    const std::vector<Point> corners{box.lo, {box.hi.x, box.lo.y}, box.hi, {box.lo.x, box.hi.y}};
    for (const Point& c : corners) {
        if (locate_in_polygon(poly, c) != PolyLocation::Outside) return true;
    }
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            if (segments_intersect(poly[i], poly[(i + 1) % n], corners[j], corners[(j + 1) % 4])
                    .touch)
                return true;
        }
    }
    return false;
}

}  // namespace pct
