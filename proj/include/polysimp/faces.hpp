#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "polysimp/polygon.hpp"

namespace polysimp {

// Interior faces of a polygon subdivided by non-crossing chords. Edges are the
// polygon boundary plus the chords; faces come back as ccw vertex cycles,
// ordered by their smallest vertex index.
inline std::vector<std::vector<std::size_t>> extract_faces(
    const Polygon& p, const std::vector<std::pair<std::size_t, std::size_t>>& chords) {
    const std::size_t n = p.size();
    // adjacency with angular sort around each vertex
    std::vector<std::vector<std::size_t>> nbr(n);
    for (std::size_t i = 0; i < n; ++i) {
        nbr[i].push_back((i + 1) % n);
        nbr[i].push_back((i + n - 1) % n);
    }
    for (auto [a, b] : chords) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    auto angular_less = [&](std::size_t base, std::size_t u, std::size_t w) {
        const Point& o = p.v[base];
        const Point& a = p.v[u];
        const Point& b = p.v[w];
        auto half = [&](const Point& q) {
            int ys = sign(q.y - o.y);
            if (ys != 0) return ys > 0 ? 0 : 1;
            return sign(q.x - o.x) > 0 ? 0 : 1;
        };
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return orient(o, a, b) > 0;
    };
    for (std::size_t i = 0; i < n; ++i)
        std::sort(nbr[i].begin(), nbr[i].end(),
                  [&](std::size_t u, std::size_t w) { return angular_less(i, u, w); });

    // directed-edge face walk: successor of (u -> v) is (v -> w) with w the
    // neighbor of v immediately clockwise of u
    std::map<std::pair<std::size_t, std::size_t>, bool> used;
    auto succ = [&](std::size_t u, std::size_t v) {
        const auto& list = nbr[v];
        auto it = std::find(list.begin(), list.end(), u);
        std::size_t pos = static_cast<std::size_t>(it - list.begin());
        std::size_t w = list[(pos + list.size() - 1) % list.size()];
        return std::pair<std::size_t, std::size_t>(v, w);
    };
    std::vector<std::vector<std::size_t>> faces;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t v : nbr[i]) {
            if (used[{i, v}]) continue;
            std::vector<std::size_t> cycle;
            std::pair<std::size_t, std::size_t> e{i, v};
            do {
                used[e] = true;
                cycle.push_back(e.first);
                e = succ(e.first, e.second);
            } while (e != std::pair<std::size_t, std::size_t>(i, v));
            std::vector<Point> pts;
            pts.reserve(cycle.size());
            for (std::size_t k : cycle) pts.push_back(p.v[k]);
            if (sign(signed_area2(pts)) > 0) faces.push_back(std::move(cycle));
        }
    }
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
    return faces;
}

}  // namespace polysimp
