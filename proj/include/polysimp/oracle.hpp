#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <queue>
#include <vector>

#include "polysimp/polygon.hpp"

namespace polysimp {

struct PointOutside : GeometryError {
    using GeometryError::GeometryError;
};

struct GeodesicPath {
    std::vector<Point> vertices;  // from a to b inclusive
    double length = 0.0;
};

// Canonical form: no repeated consecutive points, no straight interior vertices.
// Both the funnel and the oracle emit this form, so paths compare exactly.
inline std::vector<Point> canonicalize_path(std::vector<Point> v) {
    std::vector<Point> out;
    for (auto& q : v)
        if (out.empty() || out.back() != q) out.push_back(std::move(q));
    if (out.size() < 3) return out;
    std::vector<Point> res{out.front()};
    for (std::size_t i = 1; i + 1 < out.size(); ++i)
        if (orient(res.back(), out[i], out[i + 1]) != 0) res.push_back(out[i]);
    res.push_back(out.back());
    return res;
}

inline double path_length(const std::vector<Point>& v) {
    double len = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) len += distance_d(v[i], v[i + 1]);
    return len;
}

// Segment visibility inside a simple polygon, with grazed vertices counted as
// blocking: the geodesic machinery routes through collinear reflex vertices and
// canonicalization removes them afterwards.
inline bool segment_visible(const Polygon& p, const Point& a, const Point& b) {
    const std::size_t n = p.size();
    for (const Point& z : p.v)
        if (z != a && z != b && on_segment(z, a, b)) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (segments_cross_transversally(a, b, p.v[i], p.v[p.next(i)])) return false;
    // no interior contact with the boundary remains: one midpoint decides
    Point mid((a.x + b.x) / 2, (a.y + b.y) / 2);
    return side_of_cycle(p.v, mid) != Side::exterior;
}

// Brute-force geodesic oracle: cached vertex-to-vertex visibility graph plus
// Dijkstra. Independent of the funnel machinery by design.
class VisibilityOracle {
public:
    explicit VisibilityOracle(Polygon poly) : p_(std::move(poly)) {
        const std::size_t n = p_.size();
        fast_ = true;
        iv_.resize(n);
        for (std::size_t i = 0; i < n && fast_; ++i) {
            int64_t x, y;
            if (detail::small_int(p_.v[i].x, x) && detail::small_int(p_.v[i].y, y) &&
                std::abs(x) < (int64_t(1) << 40) && std::abs(y) < (int64_t(1) << 40)) {
                iv_[i] = {x, y};
            } else {
                fast_ = false;
            }
        }
        vis_.assign(n, std::vector<uint8_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                bool v = fast_ ? fast_visible(i, j) : segment_visible(p_, p_.v[i], p_.v[j]);
                vis_[i][j] = vis_[j][i] = v;
            }
    }

    const Polygon& polygon() const { return p_; }

    bool vertex_visible(std::size_t i, std::size_t j) const { return i == j || vis_[i][j]; }

    GeodesicPath path(const Point& a, const Point& b) const {
        if (side_of_cycle(p_.v, a) == Side::exterior) throw PointOutside("query start outside");
        if (side_of_cycle(p_.v, b) == Side::exterior) throw PointOutside("query end outside");
        GeodesicPath g;
        if (a == b) {
            g.vertices = {a};
            return g;
        }
        const std::size_t n = p_.size();
        const std::size_t na = n, nb = n + 1, total = n + 2;
        auto node_pt = [&](std::size_t i) -> const Point& {
            return i == na ? a : (i == nb ? b : p_.v[i]);
        };
        auto connected = [&](std::size_t i, std::size_t j) {
            if (i < n && j < n) return static_cast<bool>(vis_[i][j]);
            return segment_visible(p_, node_pt(i), node_pt(j));
        };
        std::vector<double> dist(total, std::numeric_limits<double>::infinity());
        std::vector<int> from(total, -1);
        using QE = std::pair<double, std::size_t>;
        std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;
        dist[na] = 0;
        pq.push({0, na});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (d > dist[u]) continue;
            if (u == nb) break;
            for (std::size_t w = 0; w < total; ++w) {
                if (w == u || w == na) continue;
                if (!connected(u, w)) continue;
                double nd = d + distance_d(node_pt(u), node_pt(w));
                if (nd < dist[w]) {
                    dist[w] = nd;
                    from[w] = static_cast<int>(u);
                    pq.push({nd, w});
                }
            }
        }
        if (from[nb] < 0 && dist[nb] == std::numeric_limits<double>::infinity())
            throw GeometryError("oracle found no path");  // cannot happen in a simple polygon
        std::vector<Point> rev;
        for (int c = static_cast<int>(nb); c != -1; c = from[c]) rev.push_back(node_pt(c));
        std::reverse(rev.begin(), rev.end());
        g.vertices = canonicalize_path(std::move(rev));
        g.length = path_length(g.vertices);
        return g;
    }

private:
    static int sgn128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

    static __int128 icross(const std::array<int64_t, 2>& a, const std::array<int64_t, 2>& b,
                           const std::array<int64_t, 2>& c) {
        return (__int128)(b[0] - a[0]) * (c[1] - a[1]) - (__int128)(b[1] - a[1]) * (c[0] - a[0]);
    }

    bool fast_visible(std::size_t i, std::size_t j) const {
        const std::size_t n = p_.size();
        const auto& a = iv_[i];
        const auto& b = iv_[j];
        for (std::size_t z = 0; z < n; ++z) {
            if (z == i || z == j) continue;
            const auto& q = iv_[z];
            if (icross(a, b, q) != 0) continue;
            __int128 d = (__int128)(a[0] - q[0]) * (b[0] - q[0]) +
                         (__int128)(a[1] - q[1]) * (b[1] - q[1]);
            if (d <= 0) return false;  // vertex on the closed segment
        }
        for (std::size_t e = 0; e < n; ++e) {
            const auto& c = iv_[e];
            const auto& d = iv_[(e + 1) % n];
            int d1 = sgn128(icross(a, b, c));
            int d2 = sgn128(icross(a, b, d));
            if (d1 * d2 >= 0) continue;
            int d3 = sgn128(icross(c, d, a));
            int d4 = sgn128(icross(c, d, b));
            if (d3 * d4 < 0) return false;
        }
        // crossing number for the doubled midpoint against the doubled polygon
        int64_t qx = a[0] + b[0], qy = a[1] + b[1];
        bool inside = false;
        for (std::size_t e = 0; e < n; ++e) {
            int64_t cx = 2 * iv_[e][0], cy = 2 * iv_[e][1];
            int64_t dx = 2 * iv_[(e + 1) % n][0], dy = 2 * iv_[(e + 1) % n][1];
            __int128 o = (__int128)(dx - cx) * (qy - cy) - (__int128)(dy - cy) * (qx - cx);
            if (o == 0) {
                __int128 dd = (__int128)(cx - qx) * (dx - qx) + (__int128)(cy - qy) * (dy - qy);
                if (dd <= 0) return true;  // midpoint on the boundary
            }
            bool c_below = cy <= qy, d_below = dy <= qy;
            if (c_below == d_below) continue;
            if ((dy > cy && o > 0) || (dy < cy && o < 0)) inside = !inside;
        }
        return inside;
    }

    Polygon p_;
    bool fast_ = false;
    std::vector<std::array<int64_t, 2>> iv_;
    std::vector<std::vector<uint8_t>> vis_;
};

// Orientation of a geodesic triple from the oracle side: sign of the signed
// area of the closed walk along the three pairwise geodesics.
inline int oracle_triple_orient(const VisibilityOracle& vo, const Point& a, const Point& b,
                                const Point& c) {
    if (a == b || b == c || a == c) return 0;
    auto pab = vo.path(a, b).vertices;
    auto pbc = vo.path(b, c).vertices;
    auto pca = vo.path(c, a).vertices;
    std::vector<Point> walk(pab.begin(), pab.end());
    walk.insert(walk.end(), pbc.begin() + 1, pbc.end());
    walk.insert(walk.end(), pca.begin() + 1, pca.end() - 1);
    return sign(signed_area2(walk));
}

}  // namespace polysimp
