#pragma once

#include <cassert>
#include <vector>

#include "polysimp/faces.hpp"
#include "polysimp/triangulate.hpp"

namespace polysimp {

struct NotPointed : GeometryError {
    using GeometryError::GeometryError;
};

// Geodesics from one source vertex to every other vertex, as a parent array.
struct ShortestPathTree {
    std::size_t source = 0;
    std::vector<std::size_t> parent;  // parent[source] == source

    std::vector<std::size_t> path_to(std::size_t v) const {
        std::vector<std::size_t> path{v};
        while (v != source) {
            v = parent[v];
            path.push_back(v);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
};

namespace detail {

// Funnel over one diagonal: seq runs from the left end u to the right end w of
// the ccw-directed edge (u, w) of the triangle already processed; seq[apex] is
// where the boundary paths to u and to w diverge.
struct Funnel {
    std::vector<std::size_t> seq;
    std::size_t apex;
};

}  // namespace detail

// Funnel splitting over the dual tree, visiting each triangle once.
inline ShortestPathTree shortest_path_tree(const Polygon& p, const Triangulation& t,
                                           std::size_t source) {
    const std::size_t n = p.size();
    ShortestPathTree spt;
    spt.source = source;
    spt.parent.assign(n, n);
    spt.parent[source] = source;

    struct Item {
        detail::Funnel f;
        int tri;  // triangle being entered
    };
    std::vector<Item> stack;

    int root = -1;
    for (std::size_t i = 0; i < t.tris.size() && root < 0; ++i)
        for (int k = 0; k < 3; ++k)
            if (t.tris[i][k] == source) root = static_cast<int>(i);
    assert(root >= 0);

    {
        const auto& tr = t.tris[root];
        int ks = 0;
        while (tr[ks] != source) ++ks;
        std::size_t a = tr[(ks + 1) % 3];
        std::size_t b = tr[(ks + 2) % 3];
        spt.parent[a] = source;
        spt.parent[b] = source;
        // ccw edges (source,a), (a,b), (b,source); funnels toward neighbors
        int slot_sa = ks, slot_ab = (ks + 1) % 3, slot_bs = (ks + 2) % 3;
        if (t.adj[root][slot_sa] >= 0)
            stack.push_back({{{source, a}, 0}, t.adj[root][slot_sa]});
        if (t.adj[root][slot_ab] >= 0)
            stack.push_back({{{a, source, b}, 1}, t.adj[root][slot_ab]});
        if (t.adj[root][slot_bs] >= 0)
            stack.push_back({{{b, source}, 1}, t.adj[root][slot_bs]});
    }

    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        const auto& f = it.f.seq;
        const std::size_t k = f.size() - 1;
        const std::size_t a = it.f.apex;
        const std::size_t u = f[0], w = f[k];
        const auto& tr = t.tris[it.tri];
        int kv = 0;
        while (tr[kv] == u || tr[kv] == w) ++kv;
        std::size_t v = tr[kv];
        assert(orient(p.v[u], p.v[w], p.v[v]) < 0);

        // attach v: tangent from v to the funnel boundary
        std::size_t attach = a;
        bool found = false;
        for (std::size_t i = 0; i < a && !found; ++i) {
            if (cross_sign(p.v[f[i + 1]], p.v[f[i]], p.v[f[i]], p.v[v]) <= 0) {
                attach = i;
                found = true;
            }
        }
        if (!found) {
            for (std::size_t j = k; j > a; --j) {
                if (cross_sign(p.v[f[j - 1]], p.v[f[j]], p.v[f[j]], p.v[v]) >= 0) {
                    attach = j;
                    found = true;
                    break;
                }
            }
        }
        assert(spt.parent[v] == n);
        spt.parent[v] = f[attach];

        // push children across the two far edges, ccw (u,v) and (v,w)
        for (int s = 0; s < 3; ++s) {
            int nb = t.adj[it.tri][s];
            if (nb < 0) continue;
            std::size_t ea = tr[s], eb = tr[(s + 1) % 3];
            if ((ea == w && eb == u) || (ea == u && eb == w)) continue;  // came from here
            if (ea == u && eb == v) {
                detail::Funnel child;
                child.seq.assign(f.begin(), f.begin() + attach + 1);
                child.seq.push_back(v);
                child.apex = std::min(attach, a);
                stack.push_back({std::move(child), nb});
            } else {
                assert(ea == v && eb == w);
                detail::Funnel child;
                child.seq.push_back(v);
                child.seq.insert(child.seq.end(), f.begin() + attach, f.end());
                child.apex = attach >= a ? 1 : 1 + (a - attach);
                stack.push_back({std::move(child), nb});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) assert(spt.parent[i] < n);
    return spt;
}

// Face of the pointed pseudo-triangulation: a simple polygon with exactly three
// convex vertices. cycle is the ccw face cycle; corners index into cycle.
struct PseudoTriangle {
    std::vector<std::size_t> cycle;       // polygon vertex indices, ccw
    std::array<std::size_t, 3> corners;   // positions within cycle

    // side chain s = corner s to corner s+1, inclusive, as polygon indices
    std::vector<std::size_t> side_chain(int s) const {
        std::size_t from = corners[s], to = corners[(s + 1) % 3];
        std::vector<std::size_t> out;
        for (std::size_t i = from;; i = (i + 1) % cycle.size()) {
            out.push_back(cycle[i]);
            if (i == to) break;
        }
        return out;
    }
};

struct PointedPT {
    std::vector<std::pair<std::size_t, std::size_t>> diagonals;  // SPT edges off the boundary
    std::vector<PseudoTriangle> faces;
};

// Faces of boundary + geodesic edges. Only geodesics to convex vertices
// contribute: a direct edge to a reflex vertex would cut its big angle in two
// and leave it unpointed. Every face must have exactly three convex vertices;
// anything else indicates an upstream bug.
inline PointedPT pointed_pt(const Polygon& p, const ShortestPathTree& spt) {
    const std::size_t n = p.size();
    PointedPT out;
    auto reflex = classify_reflex(p);
    std::vector<bool> visited(n, false);
    visited[spt.source] = true;
    for (std::size_t w = 0; w < n; ++w) {
        if (reflex[w]) continue;
        for (std::size_t v = w; !visited[v]; v = spt.parent[v]) {
            visited[v] = true;
            std::size_t u = spt.parent[v];
            if (p.next(v) == u || p.prev(v) == u) continue;
            auto e = std::minmax(u, v);
            out.diagonals.emplace_back(e.first, e.second);
        }
    }
    std::sort(out.diagonals.begin(), out.diagonals.end());
    out.diagonals.erase(std::unique(out.diagonals.begin(), out.diagonals.end()),
                        out.diagonals.end());

    for (auto& cycle : extract_faces(p, out.diagonals)) {
        PseudoTriangle f;
        f.cycle = std::move(cycle);
        const std::size_t m = f.cycle.size();
        std::size_t found = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = p.v[f.cycle[(i + m - 1) % m]];
            const Point& b = p.v[f.cycle[i]];
            const Point& c = p.v[f.cycle[(i + 1) % m]];
            if (orient(a, b, c) > 0) {
                if (found < 3) f.corners[found] = i;
                ++found;
            }
        }
        if (found != 3)
            throw NotPointed("face with " + std::to_string(found) + " convex vertices");
        out.faces.push_back(std::move(f));
    }
    return out;
}

// Every vertex needs an incident angle over pi: the outer face provides it for
// convex vertices, some pseudo-triangle must provide it for reflex ones.
inline bool all_pointed(const Polygon& p, const PointedPT& pt) {
    const std::size_t n = p.size();
    std::vector<bool> ok(n, false);
    auto reflex = classify_reflex(p);
    for (std::size_t v = 0; v < n; ++v)
        if (!reflex[v]) ok[v] = true;
    for (const auto& f : pt.faces) {
        const std::size_t m = f.cycle.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = p.v[f.cycle[(i + m - 1) % m]];
            const Point& b = p.v[f.cycle[i]];
            const Point& c = p.v[f.cycle[(i + 1) % m]];
            if (orient(a, b, c) < 0) ok[f.cycle[i]] = true;
        }
    }
    for (bool b : ok)
        if (!b) return false;
    return true;
}

}  // namespace polysimp
