#include "pct/tiling.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pct {

namespace {

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return compare_points(a, b) < 0; }
};

struct PointPairLess {
    bool operator()(const std::pair<Point, Point>& x, const std::pair<Point, Point>& y) const {
        const int c = compare_points(x.first, y.first);
        if (c != 0) return c < 0;
        return compare_points(x.second, y.second) < 0;
    }
};

struct HalfEdge {
    Point a, b;   // directed, interior of the cell on the left
    int cell;
    int loop_edge;  // index of the originating loop edge within the cell polygon
};

}  // namespace

Rational rat_floor(const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return Rational(q);
}

Rational rat_ceil(const Rational& x) { return -rat_floor(-x); }

int Patch::vertex_at(const Point& p) const {
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].p == p) return static_cast<int>(i);
    }
    return -1;
}

Point Patch::border_direction(int border, int from_vertex) const {
    const PatchBorder& b = borders[border];
    const Point& vp = vertices[from_vertex].p;
    if (b.a == vp) return b.b - b.a;
    return b.a - b.b;
}

int Patch::other_cell(int border, int cell) const {
    const PatchBorder& b = borders[border];
    return b.cell_left == cell ? b.cell_right : b.cell_left;
}

Patch build_patch(std::vector<PatchCell> cells, bool validate_colors) {
    Patch patch;
    patch.cells = std::move(cells);

    // All corner points, deduplicated.
    std::map<Point, int, PointLess> points;
    for (const PatchCell& c : patch.cells) {
        for (const Point& p : c.poly) points.emplace(p, 0);
    }

    // Split loop edges at foreign corner points lying strictly inside them.
    std::vector<HalfEdge> halves;
    for (size_t ci = 0; ci < patch.cells.size(); ++ci) {
        const std::vector<Point>& poly = patch.cells[ci].poly;
        const size_t n = poly.size();
        for (size_t k = 0; k < n; ++k) {
            const Point& u = poly[k];
            const Point& v = poly[(k + 1) % n];
            const Box eb = bounding_box({u, v});
            std::vector<std::pair<FieldScalar, Point>> cuts;
            for (const auto& [p, unused] : points) {
                if ((p.x - eb.lo.x).sign() < 0 || (eb.hi.x - p.x).sign() < 0 ||
                    (p.y - eb.lo.y).sign() < 0 || (eb.hi.y - p.y).sign() < 0)
                    continue;
                if (strictly_on_segment(u, v, p)) cuts.emplace_back(dot(p - u, v - u), p);
            }
            std::sort(cuts.begin(), cuts.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            Point prev = u;
            for (const auto& [t, p] : cuts) {
                halves.push_back({prev, p, static_cast<int>(ci), static_cast<int>(k)});
                prev = p;
            }
            halves.push_back({prev, v, static_cast<int>(ci), static_cast<int>(k)});
        }
    }

    // Match opposite half-edges into borders.
    std::map<std::pair<Point, Point>, std::vector<int>, PointPairLess> groups;
    for (size_t i = 0; i < halves.size(); ++i) {
        const HalfEdge& h = halves[i];
        const bool fwd = compare_points(h.a, h.b) < 0;
        groups[{fwd ? h.a : h.b, fwd ? h.b : h.a}].push_back(static_cast<int>(i));
    }
    for (const auto& [key, idxs] : groups) {
        PatchBorder b;
        b.a = key.first;
        b.b = key.second;
        for (int i : idxs) {
            const HalfEdge& h = halves[i];
            const bool fwd = compare_points(h.a, h.b) < 0;
            int& side = fwd ? b.cell_left : b.cell_right;
            if (side != -1)
                throw BuildError(BuildErrorKind::OverlappingRegions,
                                 "two regions on the same side of a border (" +
                                     patch.cells[h.cell].ref.str() + ", " +
                                     patch.cells[side].ref.str() + ")");
            side = h.cell;
            b.origins.emplace_back(h.cell, h.loop_edge);
        }
        patch.borders.push_back(std::move(b));
    }

    // Dissolve non-vertex junctions: exactly two collinear borders between the
    // same region pair merge into one (Def. 1's angle criterion).
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Point, std::vector<int>, PointLess> at;
        for (size_t bi = 0; bi < patch.borders.size(); ++bi) {
            at[patch.borders[bi].a].push_back(static_cast<int>(bi));
            at[patch.borders[bi].b].push_back(static_cast<int>(bi));
        }
        for (const auto& [p, bs] : at) {
            if (bs.size() != 2) continue;
            PatchBorder& b1 = patch.borders[bs[0]];
            PatchBorder& b2 = patch.borders[bs[1]];
            const Point o1 = (b1.a == p) ? b1.b : b1.a;
            const Point o2 = (b2.a == p) ? b2.b : b2.a;
            if (!cross(o1 - p, o2 - p).is_zero() || dot(o1 - p, o2 - p).sign() >= 0) continue;
            const auto pair_of = [](const PatchBorder& b) {
                return b.cell_left < b.cell_right ? std::pair(b.cell_left, b.cell_right)
                                                  : std::pair(b.cell_right, b.cell_left);
            };
            if (pair_of(b1) != pair_of(b2)) continue;
            // Merge b2 into b1 spanning o1..o2.
            PatchBorder merged;
            const bool fwd = compare_points(o1, o2) < 0;
            merged.a = fwd ? o1 : o2;
            merged.b = fwd ? o2 : o1;
            // Sides relative to the new direction, taken from b1.
            const bool b1_fwd_matches = dot(b1.b - b1.a, merged.b - merged.a).sign() > 0;
            merged.cell_left = b1_fwd_matches ? b1.cell_left : b1.cell_right;
            merged.cell_right = b1_fwd_matches ? b1.cell_right : b1.cell_left;
            merged.origins = b1.origins;
            merged.origins.insert(merged.origins.end(), b2.origins.begin(), b2.origins.end());
            const int i1 = std::min(bs[0], bs[1]), i2 = std::max(bs[0], bs[1]);
            patch.borders.erase(patch.borders.begin() + i2);
            patch.borders[i1] = std::move(merged);
            changed = true;
            break;
        }
    }

    std::sort(patch.borders.begin(), patch.borders.end(),
              [](const PatchBorder& x, const PatchBorder& y) {
                  const int c = compare_points(x.a, y.a);
                  if (c != 0) return c < 0;
                  return compare_points(x.b, y.b) < 0;
              });

    // Vertices: border endpoints.
    std::map<Point, std::vector<int>, PointLess> incident;
    for (size_t bi = 0; bi < patch.borders.size(); ++bi) {
        incident[patch.borders[bi].a].push_back(static_cast<int>(bi));
        incident[patch.borders[bi].b].push_back(static_cast<int>(bi));
    }
    for (const auto& [p, bs] : incident) {
        PatchVertex v;
        v.p = p;
        v.borders = bs;
        std::set<int> cs;
        for (int bi : bs) {
            const PatchBorder& b = patch.borders[bi];
            if (b.cell_left >= 0) cs.insert(b.cell_left);
            if (b.cell_right >= 0) cs.insert(b.cell_right);
            if (b.cell_left < 0 || b.cell_right < 0) v.on_patch_boundary = true;
        }
        v.cells.assign(cs.begin(), cs.end());
        const Point vp = p;
        std::sort(v.borders.begin(), v.borders.end(), [&](int x, int y) {
            const PatchBorder& bx = patch.borders[x];
            const PatchBorder& by = patch.borders[y];
            const Point dx = (bx.a == vp) ? bx.b - bx.a : bx.a - bx.b;
            const Point dy = (by.a == vp) ? by.b - by.a : by.a - by.b;
            return compare_angular(dx, dy) < 0;
        });
        patch.vertices.push_back(std::move(v));
    }
    for (size_t bi = 0; bi < patch.borders.size(); ++bi) {
        patch.borders[bi].va = patch.vertex_at(patch.borders[bi].a);
        patch.borders[bi].vb = patch.vertex_at(patch.borders[bi].b);
    }

    if (validate_colors) {
        for (const PatchBorder& b : patch.borders) {
            if (b.cell_left >= 0 && b.cell_right >= 0 &&
                patch.cells[b.cell_left].color == patch.cells[b.cell_right].color)
                throw BuildError(BuildErrorKind::AdjacentSameColor,
                                 "border between " + patch.cells[b.cell_left].ref.str() + " and " +
                                     patch.cells[b.cell_right].ref.str());
        }
        for (const PatchVertex& v : patch.vertices) {
            std::set<int> seen;
            for (int ci : v.cells) {
                if (!seen.insert(patch.cells[ci].color).second)
                    throw BuildError(BuildErrorKind::AdjacentSameColor,
                                     "two regions of color " +
                                         std::to_string(patch.cells[ci].color) +
                                         " share a vertex");
            }
        }
    }
    return patch;
}

bool patch_vertex_interior(const Patch& patch, int vertex_index) {
    const PatchVertex& v = patch.vertices[vertex_index];
    for (int bi : v.borders) {
        const PatchBorder& b = patch.borders[bi];
        if (b.cell_left < 0 || b.cell_right < 0) return false;
    }
    return true;
}

namespace {

// Overlap of open polygon interiors (boundary contact allowed).
bool polygons_overlap(const std::vector<Point>& A, const std::vector<Point>& B) {
    if (!box_intersects(bounding_box(A), bounding_box(B))) return false;
    const size_t na = A.size(), nb = B.size();
    for (size_t i = 0; i < na; ++i) {
        for (size_t j = 0; j < nb; ++j) {
            if (segments_intersect(A[i], A[(i + 1) % na], B[j], B[(j + 1) % nb]).proper)
                return true;
        }
    }
    for (const Point& p : A)
        if (locate_in_polygon(B, p) == PolyLocation::Inside) return true;
    for (const Point& p : B)
        if (locate_in_polygon(A, p) == PolyLocation::Inside) return true;
    // Edge midpoints catch containment with all corners on the other boundary.
    const FieldScalar half(Rational(1, 2));
    for (size_t i = 0; i < na; ++i) {
        const Point m{(A[i].x + A[(i + 1) % na].x) * half, (A[i].y + A[(i + 1) % na].y) * half};
        if (locate_in_polygon(B, m) == PolyLocation::Inside) return true;
    }
    for (size_t j = 0; j < nb; ++j) {
        const Point m{(B[j].x + B[(j + 1) % nb].x) * half, (B[j].y + B[(j + 1) % nb].y) * half};
        if (locate_in_polygon(A, m) == PolyLocation::Inside) return true;
    }
    return false;
}

}  // namespace

Tiling Tiling::build(TilingSpec spec) {
    Tiling t;

    std::map<int, Point> vp;
    std::map<Point, int, PointLess> seen_points;
    for (const VertexSpec& v : spec.vertices) {
        if (!vp.emplace(v.id, v.p).second)
            throw BuildError(BuildErrorKind::BadInput, "duplicate vertex id " + std::to_string(v.id));
        if (!seen_points.emplace(v.p, v.id).second)
            throw BuildError(BuildErrorKind::BadInput,
                             "two vertex ids at one point (id " + std::to_string(v.id) + ")");
    }

    std::set<int> region_ids;
    for (RegionSpec& r : spec.regions) {
        if (!region_ids.insert(r.id).second)
            throw BuildError(BuildErrorKind::BadInput, "duplicate region id " + std::to_string(r.id));
        if (r.color < 1)
            throw BuildError(BuildErrorKind::BadInput, "region color must be >= 1");
        if (r.loop.size() < 3)
            throw BuildError(BuildErrorKind::NonSimplePolygon,
                             "region " + std::to_string(r.id) + " has fewer than 3 points");
        std::vector<Point> poly;
        for (int vid : r.loop) {
            auto it = vp.find(vid);
            if (it == vp.end())
                throw BuildError(BuildErrorKind::BadInput,
                                 "region " + std::to_string(r.id) + " references unknown vertex " +
                                     std::to_string(vid));
            poly.push_back(it->second);
        }
        if (!polygon_is_simple(poly))
            throw BuildError(BuildErrorKind::NonSimplePolygon,
                             "region " + std::to_string(r.id) + " is not a simple polygon");
        const int area_sign = polygon_double_area(poly).sign();
        if (area_sign == 0)
            throw BuildError(BuildErrorKind::NonSimplePolygon,
                             "region " + std::to_string(r.id) + " has empty interior");
        if (area_sign < 0) std::reverse(r.loop.begin(), r.loop.end());
    }
    if (spec.regions.empty())
        throw BuildError(BuildErrorKind::BadInput, "no regions");

    if (spec.lattice) {
        if (cross((*spec.lattice)[0], (*spec.lattice)[1]).is_zero())
            throw BuildError(BuildErrorKind::DependentLattice, "lattice vectors are dependent");
    }

    t.spec_ = std::move(spec);
    t.vertex_points_ = std::move(vp);

    // Validation patch: the block plus one ring of translates when periodic.
    std::vector<PatchCell> cells;
    const long ring = t.periodic() ? 1 : 0;
    for (long m = -ring; m <= ring; ++m) {
        for (long n = -ring; n <= ring; ++n) {
            const Point lambda = t.periodic()
                                     ? t.t1().scaled(FieldScalar(Rational(m))) +
                                           t.t2().scaled(FieldScalar(Rational(n)))
                                     : Point{0, 0};
            for (const RegionSpec& r : t.spec_.regions) {
                PatchCell c;
                c.ref = {r.id, m, n};
                c.color = r.color;
                for (int vid : r.loop) c.poly.push_back(t.vertex_points_.at(vid) + lambda);
                cells.push_back(std::move(c));
            }
        }
    }
    std::sort(cells.begin(), cells.end(),
              [](const PatchCell& a, const PatchCell& b) { return a.ref < b.ref; });

    for (size_t i = 0; i < cells.size(); ++i) {
        for (size_t j = i + 1; j < cells.size(); ++j) {
            if (polygons_overlap(cells[i].poly, cells[j].poly))
                throw BuildError(BuildErrorKind::OverlappingRegions,
                                 cells[i].ref.str() + " overlaps " + cells[j].ref.str());
        }
    }

    const Patch patch = build_patch(cells, /*validate_colors=*/true);

    if (t.periodic()) {
        for (const PatchBorder& b : patch.borders) {
            const bool block_side =
                (b.cell_left >= 0 && patch.cells[b.cell_left].ref.m == 0 &&
                 patch.cells[b.cell_left].ref.n == 0) ||
                (b.cell_right >= 0 && patch.cells[b.cell_right].ref.m == 0 &&
                 patch.cells[b.cell_right].ref.n == 0);
            if (block_side && (b.cell_left < 0 || b.cell_right < 0))
                throw BuildError(BuildErrorKind::CoverageGap,
                                 "border with one side uncovered inside the period");
        }
        FieldScalar area = 0;
        for (const RegionSpec& r : t.spec_.regions) {
            std::vector<Point> poly;
            for (int vid : r.loop) poly.push_back(t.vertex_points_.at(vid));
            area += polygon_double_area(poly);
        }
        FieldScalar det = cross(t.t1(), t.t2());
        if (det.sign() < 0) det = -det;
        if (area - det * FieldScalar(2) != FieldScalar(0))
            throw BuildError(BuildErrorKind::CoverageGap,
                             "region areas do not fill the fundamental domain");
    }

    if (t.spec_.ownership.variant == OwnershipRule::Variant::Explicit) {
        for (const PatchBorder& b : patch.borders) {
            const bool block_side =
                (b.cell_left >= 0 && patch.cells[b.cell_left].ref.m == 0 &&
                 patch.cells[b.cell_left].ref.n == 0) ||
                (b.cell_right >= 0 && patch.cells[b.cell_right].ref.m == 0 &&
                 patch.cells[b.cell_right].ref.n == 0);
            if (!block_side) continue;
            int owners = 0;
            if (b.cell_left >= 0 && t.explicit_border_claim(patch, b, b.cell_left)) ++owners;
            if (b.cell_right >= 0 && t.explicit_border_claim(patch, b, b.cell_right)) ++owners;
            if (owners != 1)
                throw BuildError(BuildErrorKind::BadOwnership,
                                 "border owned by " + std::to_string(owners) + " cells");
        }
        for (size_t vi = 0; vi < patch.vertices.size(); ++vi) {
            const PatchVertex& v = patch.vertices[vi];
            bool block_side = false;
            for (int ci : v.cells)
                if (patch.cells[ci].ref.m == 0 && patch.cells[ci].ref.n == 0) block_side = true;
            if (!block_side || v.on_patch_boundary) continue;
            int owners = 0;
            for (int ci : v.cells)
                if (t.explicit_vertex_claim(patch, v, ci)) ++owners;
            if (owners != 1)
                throw BuildError(BuildErrorKind::BadOwnership,
                                 "vertex owned by " + std::to_string(owners) + " cells");
        }
    }

    return t;
}

Patch Tiling::instantiate_window(const Window& w) const {
    if ((w.hi.x - w.lo.x).sign() < 0 || (w.hi.y - w.lo.y).sign() < 0)
        throw BuildError(BuildErrorKind::BadInput, "empty window");

    std::vector<PatchCell> cells;
    const Box wbox{w.lo, w.hi};

    auto add_if_hit = [&](const RegionSpec& r, long m, long n, const Point& lambda) {
        std::vector<Point> poly;
        for (int vid : r.loop) poly.push_back(vertex_points_.at(vid) + lambda);
        if (polygon_intersects_box(poly, wbox)) {
            PatchCell c;
            c.ref = {r.id, m, n};
            c.color = r.color;
            c.poly = std::move(poly);
            cells.push_back(std::move(c));
        }
    };

    if (!periodic()) {
        for (const RegionSpec& r : spec_.regions) add_if_hit(r, 0, 0, Point{0, 0});
    } else {
        // Integer translate candidates from the inverse lattice map applied to
        // the window inflated by the block's bounding box.
        std::vector<Point> all;
        for (const auto& [id, p] : vertex_points_) all.push_back(p);
        const Box bb = bounding_box(all);
        const Point dlo = w.lo - bb.hi, dhi = w.hi - bb.lo;
        const FieldScalar det = cross(t1(), t2());
        Rational mlo, mhi, nlo, nhi;
        bool first = true;
        for (const Point& corner :
             {dlo, Point{dhi.x, dlo.y}, dhi, Point{dlo.x, dhi.y}}) {
            const FieldScalar mval = (corner.x * t2().y - corner.y * t2().x) / det;
            const FieldScalar nval = (corner.y * t1().x - corner.x * t1().y) / det;
            const RationalInterval mi = mval.enclosure(32), ni = nval.enclosure(32);
            if (first || mi.lo < mlo) mlo = mi.lo;
            if (first || mi.hi > mhi) mhi = mi.hi;
            if (first || ni.lo < nlo) nlo = ni.lo;
            if (first || ni.hi > nhi) nhi = ni.hi;
            first = false;
        }
        const long m0 = static_cast<long>(to_double(rat_floor(mlo))) - 1;
        const long m1 = static_cast<long>(to_double(rat_ceil(mhi))) + 1;
        const long n0 = static_cast<long>(to_double(rat_floor(nlo))) - 1;
        const long n1 = static_cast<long>(to_double(rat_ceil(nhi))) + 1;
        for (long m = m0; m <= m1; ++m) {
            for (long n = n0; n <= n1; ++n) {
                const Point lambda = t1().scaled(FieldScalar(Rational(m))) +
                                     t2().scaled(FieldScalar(Rational(n)));
                for (const RegionSpec& r : spec_.regions) add_if_hit(r, m, n, lambda);
            }
        }
    }

    std::sort(cells.begin(), cells.end(),
              [](const PatchCell& a, const PatchCell& b) { return a.ref < b.ref; });
    return build_patch(std::move(cells), /*validate_colors=*/false);
}

Patch Tiling::neighborhood(const Point& center, const Rational& radius) const {
    const FieldScalar r{radius};
    return instantiate_window(Window{{center.x - r, center.y - r}, {center.x + r, center.y + r}});
}

std::optional<Point> Tiling::vertex_point(int vertex_id) const {
    auto it = vertex_points_.find(vertex_id);
    if (it == vertex_points_.end()) return std::nullopt;
    return it->second;
}

int Tiling::vertex_degree(int vertex_id) const {
    const auto p = vertex_point(vertex_id);
    if (!p) throw UnknownVertexError("no vertex with id " + std::to_string(vertex_id));
    const Patch patch = neighborhood(*p, Rational(1, 4));
    const int vi = patch.vertex_at(*p);
    if (vi < 0)
        throw UnknownVertexError("point of vertex " + std::to_string(vertex_id) +
                                 " is not a vertex of the tiling");
    return patch_vertex_degree(patch, vi);
}

std::set<int> Tiling::colors_at_point(const Point& p) const {
    const Patch patch = neighborhood(p, Rational(1, 4));
    std::set<int> colors;
    for (const PatchCell& c : patch.cells) {
        const PolyLocation loc = locate_in_polygon(c.poly, p);
        if (loc == PolyLocation::Inside) return {c.color};
        if (loc == PolyLocation::OnBoundary) colors.insert(c.color);
    }
    return colors;
}

std::vector<std::pair<int, Point>> Tiling::block_vertices() const {
    std::vector<std::pair<int, Point>> out;
    std::map<Point, int, PointLess> reduced_seen;
    for (const auto& [id, p] : vertex_points_) {
        // Only points that survive as true vertices.
        const Patch patch = neighborhood(p, Rational(1, 4));
        if (patch.vertex_at(p) < 0) continue;
        Point key = p;
        if (periodic()) {
            const FieldScalar det = cross(t1(), t2());
            const FieldScalar mval = (p.x * t2().y - p.y * t2().x) / det;
            const FieldScalar nval = (p.y * t1().x - p.x * t1().y) / det;
            const Rational mf = rat_floor(mval.enclosure(64).midpoint());
            const Rational nf = rat_floor(nval.enclosure(64).midpoint());
            key = p - t1().scaled(FieldScalar(mf)) - t2().scaled(FieldScalar(nf));
        }
        if (reduced_seen.emplace(key, id).second) out.emplace_back(id, p);
    }
    return out;
}

std::set<int> Tiling::color_set() const {
    std::set<int> s;
    for (const RegionSpec& r : spec_.regions) s.insert(r.color);
    return s;
}

FieldScalar Tiling::max_cell_diameter_sq() const {
    FieldScalar best = 0;
    for (const RegionSpec& r : spec_.regions) {
        std::vector<Point> poly;
        for (int vid : r.loop) poly.push_back(vertex_points_.at(vid));
        for (size_t i = 0; i < poly.size(); ++i) {
            for (size_t j = i + 1; j < poly.size(); ++j) {
                const FieldScalar d = squared_distance(poly[i], poly[j]);
                if (d > best) best = d;
            }
        }
    }
    return best;
}

bool Tiling::explicit_border_claim(const Patch& patch, const PatchBorder& b, int cell) const {
    const CellRef ref = patch.cells[cell].ref;
    const RegionSpec* reg = nullptr;
    for (const RegionSpec& r : spec_.regions)
        if (r.id == ref.region) reg = &r;
    if (!reg) return false;
    for (const auto& [ci, k] : b.origins) {
        if (ci != cell) continue;
        const int v1 = reg->loop[k];
        const int v2 = reg->loop[(k + 1) % reg->loop.size()];
        for (const OwnershipRule::EdgeClaim& c : spec_.ownership.edge_claims) {
            if (c.region != ref.region) continue;
            if ((c.v1 == v1 && c.v2 == v2) || (c.v1 == v2 && c.v2 == v1)) return true;
        }
    }
    return false;
}

bool Tiling::explicit_vertex_claim(const Patch& patch, const PatchVertex& v, int cell) const {
    const CellRef ref = patch.cells[cell].ref;
    const Point lambda = periodic() ? t1().scaled(FieldScalar(Rational(ref.m))) +
                                          t2().scaled(FieldScalar(Rational(ref.n)))
                                    : Point{0, 0};
    for (const OwnershipRule::VertexClaim& c : spec_.ownership.vertex_claims) {
        if (c.region != ref.region) continue;
        const auto p = vertex_point(c.v);
        if (p && (*p + lambda) == v.p) return true;
    }
    return false;
}

namespace {

// Wedge of a cell at a boundary point p: directions (e_out, e_in) such that the
// cell interior near p is the ccw sweep from e_out to e_in.
std::optional<std::pair<Point, Point>> cell_wedge_at(const std::vector<Point>& poly,
                                                     const Point& p) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        if (poly[i] == p) {
            const Point& prev = poly[(i + n - 1) % n];
            const Point& next = poly[(i + 1) % n];
            return std::pair(next - p, prev - p);
        }
    }
    for (size_t i = 0; i < n; ++i) {
        const Point& u = poly[i];
        const Point& v = poly[(i + 1) % n];
        if (strictly_on_segment(u, v, p)) return std::pair(v - p, u - p);
    }
    return std::nullopt;
}

}  // namespace

int Tiling::border_owner(const Patch& patch, int border_index) const {
    const PatchBorder& b = patch.borders[border_index];
    if (spec_.ownership.variant == OwnershipRule::Variant::Explicit) {
        if (b.cell_left >= 0 && explicit_border_claim(patch, b, b.cell_left)) return b.cell_left;
        if (b.cell_right >= 0 && explicit_border_claim(patch, b, b.cell_right))
            return b.cell_right;
        return -1;
    }
    // a < b lexicographically, so the direction has dx > 0, or dx == 0 and dy > 0.
    const Point d = b.b - b.a;
    if (d.x.sign() > 0) return b.cell_left;   // left of a->b is the upper side
    return b.cell_right;                      // vertical border: region to the right
}

int Tiling::vertex_owner(const Patch& patch, int vertex_index) const {
    const PatchVertex& v = patch.vertices[vertex_index];
    if (spec_.ownership.variant == OwnershipRule::Variant::Explicit) {
        for (int ci : v.cells)
            if (explicit_vertex_claim(patch, v, ci)) return ci;
        return -1;
    }
    const Point up{0, 1};
    for (int ci : v.cells) {
        const auto wedge = cell_wedge_at(patch.cells[ci].poly, v.p);
        if (!wedge) continue;
        // Owner's wedge contains the direction just clockwise of straight up.
        if (strictly_in_ccw_wedge(wedge->first, wedge->second, up) ||
            same_direction(wedge->second, up))
            return ci;
    }
    return -1;
}

std::vector<Borderline> enumerate_borderlines(const Patch& patch) {
    // Canonical supporting line key: (A, B, C) for Ax + By + C = 0 with the
    // leading nonzero coefficient scaled to 1.
    struct LineKey {
        FieldScalar A, B, C;
    };
    const auto key_of = [](const Point& a, const Point& b) {
        const Point d = b - a;
        FieldScalar A = -d.y, B = d.x;
        FieldScalar C = -(A * a.x + B * a.y);
        if (A.sign() != 0) {
            const FieldScalar inv = FieldScalar(1) / A;
            return LineKey{1, B * inv, C * inv};
        }
        const FieldScalar inv = FieldScalar(1) / B;
        return LineKey{0, 1, C * inv};
    };
    const auto key_less = [](const LineKey& x, const LineKey& y) {
        int c = (x.A - y.A).sign();
        if (c != 0) return c < 0;
        c = (x.B - y.B).sign();
        if (c != 0) return c < 0;
        return (x.C - y.C).sign() < 0;
    };

    std::map<LineKey, std::vector<int>, decltype(key_less)> lines(key_less);
    for (size_t bi = 0; bi < patch.borders.size(); ++bi) {
        lines[key_of(patch.borders[bi].a, patch.borders[bi].b)].push_back(static_cast<int>(bi));
    }

    std::vector<Borderline> out;
    for (auto& [key, bs] : lines) {
        const Point dir{key.B, -key.A};  // along the line
        auto param = [&](const Point& p) { return dot(p, dir); };
        std::sort(bs.begin(), bs.end(), [&](int x, int y) {
            return param(patch.borders[x].a) + param(patch.borders[x].b) <
                   param(patch.borders[y].a) + param(patch.borders[y].b);
        });
        size_t i = 0;
        while (i < bs.size()) {
            Borderline bl;
            bl.borders.push_back(bs[i]);
            const PatchBorder& first = patch.borders[bs[i]];
            Point lo = first.a, hi = first.b;
            if (param(lo) > param(hi)) std::swap(lo, hi);
            size_t j = i + 1;
            while (j < bs.size()) {
                const PatchBorder& nxt = patch.borders[bs[j]];
                Point nlo = nxt.a, nhi = nxt.b;
                if (param(nlo) > param(nhi)) std::swap(nlo, nhi);
                if (nlo != hi) break;
                bl.interior_vertices.push_back(patch.vertex_at(hi));
                bl.borders.push_back(bs[j]);
                hi = nhi;
                ++j;
            }
            bl.start = lo;
            bl.end = hi;
            out.push_back(std::move(bl));
            i = j;
        }
    }
    return out;
}

}  // namespace pct
