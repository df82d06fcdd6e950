#pragma once

#include <algorithm>
#include <vector>

#include "polysimp/geom.hpp"

namespace polysimp {

struct DegeneratePolygon : GeometryError {
    using GeometryError::GeometryError;
};

struct NotSimple : GeometryError {
    std::size_t edge_a, edge_b;
    NotSimple(std::size_t a, std::size_t b)
        : GeometryError("polygon is not simple: edges " + std::to_string(a) + " and " +
                        std::to_string(b) + " intersect"),
          edge_a(a),
          edge_b(b) {}
};

// Closed vertex cycle, first vertex not repeated. Canonical polygons are
// counterclockwise, have no repeated consecutive vertices and no angle-pi vertices.
struct Polygon {
    std::vector<Point> v;

    std::size_t size() const { return v.size(); }
    const Point& at(std::size_t i) const { return v[i % v.size()]; }
    std::size_t next(std::size_t i) const { return (i + 1) % v.size(); }
    std::size_t prev(std::size_t i) const { return (i + v.size() - 1) % v.size(); }
};

// Twice the signed area of the cycle. Positive for counterclockwise.
inline Rational signed_area2(const std::vector<Point>& v) {
    Rational a = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& p = v[i];
        const Point& q = v[(i + 1) % v.size()];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

// Drop repeated and angle-pi vertices, orient counterclockwise. Simplicity is
// not checked here.
inline Polygon canonicalize(std::vector<Point> raw) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Point> out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == raw[(i + 1) % raw.size()]) {
                changed = true;
                continue;
            }
            out.push_back(raw[i]);
        }
        raw = std::move(out);
        if (raw.size() < 3) throw DegeneratePolygon("fewer than 3 distinct vertices");
        out.clear();
        for (std::size_t i = 0; i < raw.size(); ++i) {
            const Point& p = raw[(i + raw.size() - 1) % raw.size()];
            const Point& c = raw[i];
            const Point& n = raw[(i + 1) % raw.size()];
            if (orient(p, c, n) == 0) {
                changed = true;
                continue;
            }
            out.push_back(c);
        }
        raw = std::move(out);
        if (raw.size() < 3) throw DegeneratePolygon("all vertices collinear");
    }
    if (sign(signed_area2(raw)) < 0) std::reverse(raw.begin(), raw.end());
    if (sign(signed_area2(raw)) == 0) throw DegeneratePolygon("zero-area polygon");
    return Polygon{std::move(raw)};
}

// O(n^2) pairwise edge check, used on ingest and on outputs in tests.
inline void validate_simple(const Polygon& p) {
    const std::size_t n = p.size();
    if (n < 3) throw DegeneratePolygon("fewer than 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            const Point& a1 = p.v[i];
            const Point& a2 = p.v[p.next(i)];
            const Point& b1 = p.v[j];
            const Point& b2 = p.v[p.next(j)];
            if (adjacent) {
                // adjacent edges share exactly one endpoint; any further contact
                // is a fold-back, which canonicalization rules out unless the
                // chains overlap collinearly
                if (segments_properly_intersect(a1, a2, b1, b2)) throw NotSimple(i, j);
            } else {
                if (segments_properly_intersect(a1, a2, b1, b2)) throw NotSimple(i, j);
                if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) throw NotSimple(i, j);
            }
        }
    }
}

// Per-vertex labels; true = reflex. With the ccw-outer / cw-holes convention the
// same directed test works for hole cycles, yielding reflex-in-region labels.
inline std::vector<bool> classify_reflex(const Polygon& p) {
    std::vector<bool> reflex(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        reflex[i] = orient(p.v[p.prev(i)], p.v[i], p.v[p.next(i)]) < 0;
    return reflex;
}

inline std::size_t reflex_count(const Polygon& p) {
    std::size_t r = 0;
    for (bool b : classify_reflex(p))
        if (b) ++r;
    return r;
}

enum class Side { interior, boundary, exterior };

// Crossing-number test against a single cycle; orientation-agnostic.
// Vertex hits are handled by the half-open [min_y, max_y) rule.
inline Side side_of_cycle(const std::vector<Point>& v, const Point& q) {
    const std::size_t n = v.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        if (on_segment(q, a, b)) return Side::boundary;
        const bool a_below = a.y <= q.y;
        const bool b_below = b.y <= q.y;
        if (a_below == b_below) continue;
        // edge straddles the horizontal line through q; side of crossing
        int o = orient(a, b, q);
        if ((b.y > a.y && o > 0) || (b.y < a.y && o < 0)) inside = !inside;
    }
    return inside ? Side::interior : Side::exterior;
}

// Region with holes: outer stored counterclockwise, holes clockwise, so material
// is always to the left of directed edges.
struct PolygonWithHoles {
    Polygon outer;
    std::vector<Polygon> holes;

    std::size_t total_vertices() const {
        std::size_t n = outer.size();
        for (const auto& h : holes) n += h.size();
        return n;
    }
};

inline Side side_of(const PolygonWithHoles& region, const Point& q) {
    Side s = side_of_cycle(region.outer.v, q);
    if (s != Side::interior) return s;
    for (const auto& h : region.holes) {
        Side hs = side_of_cycle(h.v, q);
        if (hs == Side::boundary) return Side::boundary;
        if (hs == Side::interior) return Side::exterior;
    }
    return Side::interior;
}

// Reflex count of the whole region (hole vertices classified in the region).
inline std::size_t region_reflex_count(const PolygonWithHoles& region) {
    std::size_t r = reflex_count(region.outer);
    for (const auto& h : region.holes) r += reflex_count(h);
    return r;
}

inline void validate_region(const PolygonWithHoles& region) {
    validate_simple(region.outer);
    if (sign(signed_area2(region.outer.v)) <= 0)
        throw DegeneratePolygon("outer boundary must be counterclockwise");
    for (std::size_t h = 0; h < region.holes.size(); ++h) {
        const Polygon& hole = region.holes[h];
        validate_simple(hole);
        if (sign(signed_area2(hole.v)) >= 0)
            throw DegeneratePolygon("holes must be clockwise");
        for (const Point& p : hole.v)
            if (side_of_cycle(region.outer.v, p) != Side::interior)
                throw DegeneratePolygon("hole not strictly inside outer boundary");
        for (std::size_t g = 0; g < h; ++g) {
            const Polygon& other = region.holes[g];
            for (std::size_t i = 0; i < hole.size(); ++i)
                for (std::size_t j = 0; j < other.size(); ++j)
                    if (segments_properly_intersect(hole.v[i], hole.v[hole.next(i)], other.v[j],
                                                    other.v[other.next(j)]))
                        throw DegeneratePolygon("holes intersect");
            if (side_of_cycle(other.v, hole.v[0]) == Side::interior ||
                side_of_cycle(hole.v, other.v[0]) == Side::interior)
                throw DegeneratePolygon("nested holes");
        }
    }
}

}  // namespace polysimp
