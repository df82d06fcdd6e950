#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "polysimp/polygon.hpp"

namespace polysimp {

struct GenerationFailed : GeometryError {
    using GeometryError::GeometryError;
};

enum class DentStyle { convex_dip, staircase };

struct Dent {
    DentStyle style = DentStyle::convex_dip;
    std::size_t depth_vertices = 1;  // reflex vertices this dent contributes
};

struct GenSpec {
    std::size_t hull_vertices = 4;
    std::vector<Dent> dents;
    std::uint64_t seed = 0;
    long scale = 1000000;
};

namespace detail {

// Valtr-style random strictly convex polygon with integer coordinates and
// exactly n vertices (retries while direction collisions merge vertices away).
inline std::vector<Point> random_convex(std::mt19937_64& rng, std::size_t n, long scale) {
    std::uniform_int_distribution<long> d(0, scale);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<long> xs(n), ys(n);
        for (auto& v : xs) v = d(rng);
        for (auto& v : ys) v = d(rng);
        std::sort(xs.begin(), xs.end());
        std::sort(ys.begin(), ys.end());
        auto deltas = [&](std::vector<long>& s) {
            std::vector<long> out;
            long up = s.front(), down = s.front();
            std::bernoulli_distribution coin(0.5);
            for (std::size_t i = 1; i + 1 < s.size(); ++i) {
                if (coin(rng)) {
                    out.push_back(s[i] - up);
                    up = s[i];
                } else {
                    out.push_back(down - s[i]);
                    down = s[i];
                }
            }
            out.push_back(s.back() - up);
            out.push_back(down - s.back());
            return out;
        };
        std::vector<long> dx = deltas(xs), dy = deltas(ys);
        std::shuffle(dy.begin(), dy.end(), rng);
        std::vector<std::pair<long, long>> vec(n);
        for (std::size_t i = 0; i < n; ++i) vec[i] = {dx[i], dy[i]};
        // sort by direction; equal directions would merge into one edge
        auto half = [](const std::pair<long, long>& v) {
            if (v.second != 0) return v.second > 0 ? 0 : 1;
            return v.first > 0 ? 0 : 1;
        };
        std::sort(vec.begin(), vec.end(), [&](const auto& a, const auto& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            __int128 c = (__int128)a.first * b.second - (__int128)a.second * b.first;
            return c > 0;
        });
        // merge parallel neighbours (equal directions sort adjacently); exact
        // vertex counts are only best-effort for large n
        std::vector<std::pair<long, long>> merged;
        for (const auto& v : vec) {
            if (v.first == 0 && v.second == 0) continue;
            if (!merged.empty()) {
                const auto& m = merged.back();
                if ((__int128)m.first * v.second - (__int128)m.second * v.first == 0 &&
                    half(m) == half(v)) {
                    merged.back() = {m.first + v.first, m.second + v.second};
                    continue;
                }
            }
            merged.push_back(v);
        }
        vec = std::move(merged);
        if (vec.size() < 3 || (vec.size() < n && attempt < 4)) continue;
        std::vector<Point> out;
        out.reserve(vec.size());
        long cx = 0, cy = 0;
        for (const auto& v : vec) {
            out.emplace_back(Rational(cx), Rational(cy));
            cx += v.first;
            cy += v.second;
        }
        return out;
    }
    throw GenerationFailed("could not draw a strictly convex polygon");
}

}  // namespace detail

// Convex polygon with dents carved into distinct edges. A convex-dip dent puts
// k points on a concave parabola (all k reflex); a staircase dent of depth d
// puts 2d-1 points on two alternating inward heights (d reflex).
inline PolygonWithHoles generate(const GenSpec& spec) {
    if (spec.hull_vertices < 3) throw GenerationFailed("need at least 3 hull vertices");
    if (spec.dents.size() > spec.hull_vertices)
        throw GenerationFailed("more dents than edges");
    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Rational damp(1, 1 << attempt);  // shrink dent heights after failures
        auto hull = detail::random_convex(rng, spec.hull_vertices, spec.scale);
        const std::size_t m = hull.size();
        std::vector<std::size_t> edges(m);
        for (std::size_t i = 0; i < m; ++i) edges[i] = i;
        std::shuffle(edges.begin(), edges.end(), rng);

        std::vector<std::vector<Point>> inserted(m);
        for (std::size_t di = 0; di < spec.dents.size(); ++di) {
            const Dent& dent = spec.dents[di];
            std::size_t e = edges[di];
            const Point& a = hull[e];
            const Point& b = hull[(e + 1) % m];
            Rational dirx = b.x - a.x, diry = b.y - a.y;
            Rational nx = -diry, ny = dirx;  // inward for a ccw polygon
            auto at = [&](const Rational& t, const Rational& h) {
                return Point(a.x + t * dirx + h * nx, a.y + t * diry + h * ny);
            };
            std::vector<Point>& pts = inserted[e];
            if (dent.style == DentStyle::convex_dip) {
                long k = static_cast<long>(dent.depth_vertices);
                for (long i = 1; i <= k; ++i) {
                    Rational t(i, k + 1);
                    Rational h = damp * Rational(2, 5) * t * (1 - t);
                    pts.push_back(at(t, h));
                }
            } else {
                long dd = static_cast<long>(dent.depth_vertices);
                Rational hi = damp * Rational(1, 8 * dd);
                Rational lo = damp * Rational(1, 16 * dd);
                for (long j = 1; j <= 2 * dd - 1; ++j) {
                    Rational t(j, 2 * dd);
                    pts.push_back(at(t, j % 2 == 1 ? hi : lo));
                }
            }
        }
        std::vector<Point> raw;
        for (std::size_t i = 0; i < m; ++i) {
            raw.push_back(hull[i]);
            raw.insert(raw.end(), inserted[i].begin(), inserted[i].end());
        }
        // clear denominators so coordinates stay plain integers
        mpz_class lcm = 1;
        for (const Point& p : raw) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.x.get_den_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.y.get_den_mpz_t());
        }
        if (lcm != 1)
            for (Point& p : raw) {
                p.x *= lcm;
                p.y *= lcm;
            }
        std::vector<Point> hs = hull;
        if (lcm != 1)
            for (Point& p : hs) {
                p.x *= lcm;
                p.y *= lcm;
            }
        // Simplicity without the O(n^2) sweep: the hull is strictly convex and
        // each dent chain is monotone along its edge, so the polygon is simple
        // iff every dent point lies strictly inside the hull (convexity keeps
        // whole chains inside then) and chains of different edges don't touch.
        bool ok = true;
        Rational scl = lcm;
        std::vector<std::pair<Point, Point>> segs;  // dent-chain segments, tagged
        std::vector<std::size_t> seg_edge;
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (inserted[e].empty()) continue;
            Point prev(hs[e].x, hs[e].y);
            for (const Point& q0 : inserted[e]) {
                Point q(q0.x * scl, q0.y * scl);
                for (std::size_t j = 0; j < m && ok; ++j)
                    if (orient(hs[j], hs[(j + 1) % m], q) <= 0) ok = false;
                segs.emplace_back(prev, q);
                seg_edge.push_back(e);
                prev = q;
            }
            segs.emplace_back(prev, hs[(e + 1) % m]);
            seg_edge.push_back(e);
        }
        for (std::size_t i = 0; i < segs.size() && ok; ++i)
            for (std::size_t j = i + 1; j < segs.size() && ok; ++j) {
                if (seg_edge[i] == seg_edge[j]) continue;
                if (segments_properly_intersect(segs[i].first, segs[i].second, segs[j].first,
                                                segs[j].second))
                    ok = false;
                // shared dent points between chains are also a breach; shared
                // hull vertices (chain endpoints of adjacent edges) are fine
                if (segs[i].second == segs[j].first || segs[i].second == segs[j].second ||
                    segs[i].first == segs[j].first || segs[i].first == segs[j].second) {
                    const Point& shared = segs[i].second == segs[j].first ||
                                                  segs[i].second == segs[j].second
                                              ? segs[i].second
                                              : segs[i].first;
                    bool is_hull = false;
                    for (const Point& hv : hs)
                        if (hv == shared) is_hull = true;
                    if (!is_hull) ok = false;
                }
            }
        if (!ok) continue;
        try {
            Polygon p = canonicalize(raw);
            if (p.size() != raw.size()) continue;  // a dent point went collinear
            std::size_t want_r = 0;
            for (const Dent& d : spec.dents) want_r += d.depth_vertices;
            if (reflex_count(p) != want_r) continue;
            PolygonWithHoles q;
            q.outer = std::move(p);
            return q;
        } catch (const GeometryError&) {
            continue;
        }
    }
    throw GenerationFailed("retry budget exhausted");
}

}  // namespace polysimp
