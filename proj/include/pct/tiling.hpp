#pragma once

#include "pct/errors.hpp"
#include "pct/geometry.hpp"

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace pct {

struct OwnershipRule {
    enum class Variant { AboveRight, Explicit };
    Variant variant = Variant::AboveRight;

    struct EdgeClaim {
        int region;
        int v1, v2;
    };
    struct VertexClaim {
        int region;
        int v;
    };
    std::vector<EdgeClaim> edge_claims;
    std::vector<VertexClaim> vertex_claims;
};

struct VertexSpec {
    int id;
    Point p;
};

struct RegionSpec {
    int id;
    int color;               // >= 1
    std::vector<int> loop;   // vertex ids, counter-clockwise
};

// Raw input to build_tiling; the PCT parser produces exactly this.
struct TilingSpec {
    std::vector<VertexSpec> vertices;
    std::vector<RegionSpec> regions;
    std::optional<std::array<Point, 2>> lattice;  // t1, t2 when periodic
    OwnershipRule ownership;
};

struct Window {
    Point lo, hi;  // axis-aligned, lo <= hi componentwise
};

// One region instance: the block region translated by m*t1 + n*t2.
struct CellRef {
    int region;
    long m = 0, n = 0;

    bool operator==(const CellRef& o) const {
        return region == o.region && m == o.m && n == o.n;
    }
    bool operator<(const CellRef& o) const {
        if (m != o.m) return m < o.m;
        if (n != o.n) return n < o.n;
        return region < o.region;
    }
    std::string str() const {
        return "r" + std::to_string(region) + "@" + std::to_string(m) + "," + std::to_string(n);
    }
};

struct PatchCell {
    CellRef ref;
    int color;
    std::vector<Point> poly;  // ccw, as listed in the spec (pass-through points kept)
};

struct PatchBorder {
    Point a, b;                    // a < b lexicographically
    int cell_left = -1, cell_right = -1;  // sides of the directed segment a->b; -1 = BOUNDARY
    int va = -1, vb = -1;          // patch vertex indices of the endpoints
    // Loop-edge origins for explicit ownership: (cell index, loop edge index).
    std::vector<std::pair<int, int>> origins;
};

struct PatchVertex {
    Point p;
    std::vector<int> borders;  // incident border indices, sorted by outgoing angle
    std::vector<int> cells;    // cells whose closure contains the point
    bool on_patch_boundary = false;
};

struct Patch {
    std::vector<PatchCell> cells;
    std::vector<PatchBorder> borders;
    std::vector<PatchVertex> vertices;

    int vertex_at(const Point& p) const;          // index or -1
    Point border_direction(int border, int from_vertex) const;  // outgoing direction
    int other_cell(int border, int cell) const;
};

// Maximal closed collinear chain of borders and vertices.
struct Borderline {
    Point start, end;
    std::vector<int> interior_vertices;  // patch vertex indices, in order
    std::vector<int> borders;            // patch border indices, in order
};

class Tiling {
  public:
    // Validates and cross-links; throws BuildError.
    static Tiling build(TilingSpec spec);

    bool periodic() const { return spec_.lattice.has_value(); }
    const TilingSpec& spec() const { return spec_; }
    const Point& t1() const { return (*spec_.lattice)[0]; }
    const Point& t2() const { return (*spec_.lattice)[1]; }

    // Elements whose closure intersects the window, deterministic order.
    Patch instantiate_window(const Window& w) const;
    // All cells whose closure meets the disk of the given radius around the center
    // (by bounding box, conservative), as a patch.
    Patch neighborhood(const Point& center, const Rational& radius) const;

    std::optional<Point> vertex_point(int vertex_id) const;
    int vertex_degree(int vertex_id) const;  // throws UnknownVertexError
    std::set<int> colors_at_point(const Point& p) const;

    // Distinct vertex representatives of one period (periodic) or all true
    // vertices (finite), as (input id when available, point).
    std::vector<std::pair<int, Point>> block_vertices() const;

    std::set<int> color_set() const;
    FieldScalar max_cell_diameter_sq() const;

    // Owner cell of a border / vertex under the tiling's ownership rule;
    // -1 when unowned (finite-patch rim).
    int border_owner(const Patch& patch, int border_index) const;
    int vertex_owner(const Patch& patch, int vertex_index) const;

  private:
    TilingSpec spec_;
    std::map<int, Point> vertex_points_;

    bool explicit_border_claim(const Patch& patch, const PatchBorder& b, int cell) const;
    bool explicit_vertex_claim(const Patch& patch, const PatchVertex& v, int cell) const;
};

// Shared helpers.
Patch build_patch(std::vector<PatchCell> cells, bool validate_colors);
std::vector<Borderline> enumerate_borderlines(const Patch& patch);

// A vertex is interior when every incident border has cells on both sides.
bool patch_vertex_interior(const Patch& patch, int vertex_index);
// Patch-local degree.
inline int patch_vertex_degree(const Patch& patch, int vi) {
    return static_cast<int>(patch.vertices[vi].borders.size());
}

Rational rat_floor(const Rational& x);
Rational rat_ceil(const Rational& x);

}  // namespace pct
