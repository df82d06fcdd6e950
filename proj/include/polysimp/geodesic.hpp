#pragma once

#include <vector>

#include "polysimp/oracle.hpp"
#include "polysimp/triangulate.hpp"

namespace polysimp {

namespace detail {

// Funnel walk over portal edges, apex restart variant. Portals are (left,
// right) as seen walking the sleeve; first is (a,a), last is (b,b).
inline std::vector<Point> funnel_walk(const std::vector<std::pair<Point, Point>>& portals) {
    std::vector<Point> path{portals[0].first};
    Point A = portals[0].first, L = A, R = A;
    std::size_t ai = 0, li = 0, ri = 0;
    for (std::size_t i = 1; i < portals.size(); ++i) {
        const Point& nl = portals[i].first;
        const Point& nr = portals[i].second;
        if (R == A || orient(A, R, nr) >= 0) {  // right boundary narrows
            if (L == A || orient(A, L, nr) <= 0) {
                R = nr;
                ri = i;
            } else {  // crossed the left boundary: apex advances to L
                path.push_back(L);
                A = L;
                ai = li;
                L = R = A;
                ri = ai;
                i = ai;
                continue;
            }
        }
        if (L == A || orient(A, L, nl) <= 0) {  // left boundary narrows
            if (R == A || orient(A, R, nl) >= 0) {
                L = nl;
                li = i;
            } else {
                path.push_back(R);
                A = R;
                ai = ri;
                L = R = A;
                li = ai;
                i = ai;
                continue;
            }
        }
    }
    path.push_back(portals.back().first);
    return path;
}

}  // namespace detail

// Unique geodesic between two points of a triangulated simple polygon: sleeve
// of triangles from the dual path, then one funnel pass. O(n) per query.
inline GeodesicPath geodesic_path(const Polygon& p, const Triangulation& t, const Point& a,
                                  const Point& b) {
    int ta = t.locate(p, a);
    int tb = t.locate(p, b);
    if (ta < 0) throw PointOutside("query start outside the polygon");
    if (tb < 0) throw PointOutside("query end outside the polygon");
    GeodesicPath g;
    if (a == b) {
        g.vertices = {a};
        return g;
    }
    if (ta == tb) {
        g.vertices = {a, b};
        g.length = path_length(g.vertices);
        return g;
    }
    auto sleeve = dual_path(t, ta, tb);
    std::vector<std::pair<Point, Point>> portals;
    portals.reserve(sleeve.size() + 1);
    portals.emplace_back(a, a);
    for (std::size_t k = 0; k + 1 < sleeve.size(); ++k) {
        int cur = sleeve[k], nxt = sleeve[k + 1];
        int s = 0;
        while (t.adj[cur][s] != nxt) ++s;
        // ccw edge (x, y) of the exited triangle: y is on the left going out
        const Point& x = p.v[t.tris[cur][s]];
        const Point& y = p.v[t.tris[cur][(s + 1) % 3]];
        portals.emplace_back(y, x);
    }
    portals.emplace_back(b, b);
    g.vertices = canonicalize_path(detail::funnel_walk(portals));
    g.length = path_length(g.vertices);
    return g;
}

// Orientation of the geodesic triple: the sign of the turn where the two
// geodesics out of a corner diverge. Falls back across the three corners;
// everything straight or prefix-nested means a degenerate (flat) triple.
inline int triple_orient(const Polygon& p, const Triangulation& t, const Point& a, const Point& b,
                         const Point& c) {
    if (a == b || b == c || a == c) return 0;
    int ta = t.locate(p, a), tb = t.locate(p, b), tc = t.locate(p, c);
    if (ta < 0 || tb < 0 || tc < 0) throw PointOutside("triple point outside the polygon");
    if (ta == tb && tb == tc) return orient(a, b, c);

    auto corner_sign = [&](const Point& x, const Point& y, const Point& z) {
        auto py = geodesic_path(p, t, x, y).vertices;
        auto pz = geodesic_path(p, t, x, z).vertices;
        std::size_t d = 0;
        while (d < py.size() && d < pz.size() && py[d] == pz[d]) ++d;
        if (d == py.size() || d == pz.size()) return 0;  // one geodesic extends the other
        return orient(py[d - 1], py[d], pz[d]);
    };
    if (int s = corner_sign(a, b, c)) return s;
    if (int s = corner_sign(b, c, a)) return s;
    if (int s = corner_sign(c, a, b)) return s;
    return 0;
}

}  // namespace polysimp
