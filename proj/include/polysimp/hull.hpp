#pragma once

#include <algorithm>
#include <deque>
#include <vector>

#include "polysimp/polygon.hpp"

namespace polysimp {

// Convex hull of a simple polygon as vertex indices, counterclockwise and in
// the same cyclic order as on the boundary.
struct Hull {
    std::vector<std::size_t> indices;

    bool contains(std::size_t i) const {
        return std::binary_search(indices.begin(), indices.end(), i);
    }
};

// Melkman's online hull over the boundary sequence, O(n). Strictly convex
// output (collinear boundary vertices are dropped).
inline Hull convex_hull(const Polygon& p) {
    const std::size_t n = p.size();
    const auto& v = p.v;
    std::deque<std::size_t> d;
    // seed with the first ccw triple
    if (orient(v[0], v[1], v[2]) > 0) {
        d = {2, 0, 1, 2};
    } else {
        d = {2, 1, 0, 2};
    }
    for (std::size_t i = 3; i < n; ++i) {
        if (orient(v[d[d.size() - 2]], v[d.back()], v[i]) > 0 &&
            orient(v[d[0]], v[d[1]], v[i]) > 0)
            continue;  // inside the current hull
        while (d.size() >= 2 && orient(v[d[d.size() - 2]], v[d.back()], v[i]) <= 0) d.pop_back();
        d.push_back(i);
        while (d.size() >= 2 && orient(v[i], v[d[0]], v[d[1]]) <= 0) d.pop_front();
        d.push_front(i);
    }
    d.pop_back();  // closing duplicate
    std::vector<std::size_t> idx(d.begin(), d.end());
    // hull cyclic order equals boundary cyclic order for a simple polygon, so
    // ascending boundary indices give the hull counterclockwise
    std::sort(idx.begin(), idx.end());
    return Hull{std::move(idx)};
}

// A component of CH(P) \ P: one hull edge (the lid) plus the boundary subchain
// of P between the lid endpoints. Stored as index ranges into P.
struct Pocket {
    std::size_t lid_from, lid_to;  // hull vertices; lid edge (lid_from, lid_to)
    // chain = P indices lid_from .. lid_to walking the boundary forward

    std::size_t chain_length(const Polygon& p) const {  // vertex count incl. endpoints
        std::size_t n = p.size();
        return (lid_to + n - lid_from) % n + 1;
    }

    std::size_t chain_index(const Polygon& p, std::size_t k) const {  // k-th chain vertex
        return (lid_from + k) % p.size();
    }

    // Pocket polygon, counterclockwise: the chain reversed, closed by the lid.
    // pocket_vertex(k) maps pocket-polygon index -> P index.
    std::size_t pocket_vertex(const Polygon& p, std::size_t k) const {
        std::size_t n = p.size();
        return (lid_to + n - k) % n;
    }

    Polygon pocket_polygon(const Polygon& p) const {
        std::size_t len = chain_length(p);
        Polygon out;
        out.v.reserve(len);
        for (std::size_t k = 0; k < len; ++k) out.v.push_back(p.v[pocket_vertex(p, k)]);
        return out;
    }
};

// Maximal boundary subchain lying on the hull between two lid edges (the whole
// hull if there are no pockets). Indices into P, walking forward.
struct HullChain {
    std::vector<std::size_t> indices;
    bool closed = false;  // true only for the pocket-free whole-hull case
};

struct PocketDecomposition {
    std::vector<Pocket> pockets;
    std::vector<HullChain> chains;
};

inline PocketDecomposition extract_pockets(const Polygon& p, const Hull& h) {
    const std::size_t n = p.size();
    const std::size_t m = h.indices.size();
    PocketDecomposition out;
    std::vector<bool> is_lid(m, false);
    for (std::size_t j = 0; j < m; ++j) {
        std::size_t a = h.indices[j];
        std::size_t b = h.indices[(j + 1) % m];
        if ((a + 1) % n != b) {
            is_lid[j] = true;
            out.pockets.push_back(Pocket{a, b});
        }
    }
    if (out.pockets.empty()) {
        HullChain all;
        all.indices = h.indices;
        all.closed = true;
        out.chains.push_back(std::move(all));
        return out;
    }
    // hull chains: maximal runs of non-lid hull edges, delimited by lids
    for (std::size_t j = 0; j < m; ++j) {
        if (!is_lid[j]) continue;
        // chain starts at the lid's far endpoint
        std::size_t k = (j + 1) % m;
        HullChain c;
        c.indices.push_back(h.indices[k]);
        while (!is_lid[k]) {
            k = (k + 1) % m;
            c.indices.push_back(h.indices[k]);
        }
        out.chains.push_back(std::move(c));
    }
    return out;
}

}  // namespace polysimp
