#pragma once

#include <random>
#include <vector>

#include "polysimp/polygon.hpp"

namespace testutil {

using polysimp::Point;
using polysimp::Polygon;
using polysimp::Rational;

inline Polygon poly(std::initializer_list<std::pair<long, long>> pts) {
    Polygon p;
    for (auto [x, y] : pts) p.v.emplace_back(Rational(x), Rational(y));
    return p;
}

inline Point pt(long x, long y) { return Point(Rational(x), Rational(y)); }

// Random simple polygon: integer points sorted by angle around their centroid.
// Retries until the result is simple after canonicalization.
inline Polygon random_star(std::mt19937_64& rng, std::size_t n, long span = 1000) {
    std::uniform_int_distribution<long> d(-span, span);
    for (;;) {
        std::vector<Point> pts;
        for (std::size_t i = 0; i < n; ++i) pts.emplace_back(Rational(d(rng)), Rational(d(rng)));
        Rational cx = 0, cy = 0;
        for (const auto& p : pts) {
            cx += p.x;
            cy += p.y;
        }
        cx /= (long)n;
        cy /= (long)n;
        Point c(cx, cy);
        auto half = [&](const Point& q) {
            int ys = polysimp::sign(q.y - c.y);
            if (ys != 0) return ys > 0 ? 0 : 1;
            return polysimp::sign(q.x - c.x) > 0 ? 0 : 1;
        };
        std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            int o = polysimp::orient(c, a, b);
            if (o != 0) return o > 0;
            return polysimp::sign(polysimp::dot(c, a, a) - polysimp::dot(c, b, b)) < 0;
        });
        try {
            Polygon p = polysimp::canonicalize(pts);
            polysimp::validate_simple(p);
            return p;
        } catch (const polysimp::GeometryError&) {
            continue;
        }
    }
}

}  // namespace testutil
