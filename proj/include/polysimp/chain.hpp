#pragma once

#include <vector>

#include "polysimp/geom.hpp"

namespace polysimp {

struct ChainNotHullHonest : GeometryError {
    using GeometryError::GeometryError;
};

struct NotSimplifiable : GeometryError {
    using GeometryError::GeometryError;
};

struct CannotSplit : GeometryError {
    using GeometryError::GeometryError;
};

// Convex chain: consistent turning direction, so it lies on the boundary of its
// own convex hull.
struct Chain {
    std::vector<Point> v;

    std::size_t size() const { return v.size(); }
};

// +1 all left turns, -1 all right turns, 0 straight; throws on mixed turning.
inline int turn_direction(const Chain& c) {
    int dir = 0;
    for (std::size_t i = 1; i + 1 < c.v.size(); ++i) {
        int o = orient(c.v[i - 1], c.v[i], c.v[i + 1]);
        if (o == 0) continue;
        if (dir == 0)
            dir = o;
        else if (dir != o)
            throw ChainNotHullHonest("chain changes turning direction");
    }
    return dir;
}

// True iff the chain's total turn is under pi: the forward ray at the start and
// the backward ray at the end meet. Chains of up to 3 vertices always qualify.
inline bool is_simplifiable(const Chain& c) {
    turn_direction(c);
    if (c.size() <= 3) return true;
    Ray r1(c.v.front(), c.v[1]);
    Ray r2(c.v.back(), c.v[c.size() - 2]);
    return ray_intersection(r1, r2).has_value();
}

// Replace the interior by the single ray crossing point m.
inline Chain simplify_chain(const Chain& c) {
    turn_direction(c);
    if (c.size() <= 3) return c;
    Ray r1(c.v.front(), c.v[1]);
    Ray r2(c.v.back(), c.v[c.size() - 2]);
    auto m = ray_intersection(r1, r2);
    if (!m) throw NotSimplifiable("end rays of the chain do not meet");
    Chain out;
    out.v = {c.v.front(), *m, c.v.back()};
    return out;
}

// For a non-simplifiable chain, cut at the first interior vertex where the
// accumulated turn reaches pi. Both halves then turn less than pi: the prefix
// stops short of pi by construction, and the suffix gets what remains of a
// total that is under 2*pi.
inline std::pair<Chain, Chain> split_at_vstar(const Chain& c) {
    int dir = turn_direction(c);
    if (is_simplifiable(c)) throw NotSimplifiable("chain needs no split");
    if (dir == 0 || c.size() < 4) throw CannotSplit("no interior vertex to cut at");
    const Point& d1a = c.v[0];
    const Point& d1b = c.v[1];
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        int s = cross_sign(d1a, d1b, c.v[i], c.v[i + 1]);
        if (s * dir <= 0) {
            Chain left, right;
            left.v.assign(c.v.begin(), c.v.begin() + i + 1);
            right.v.assign(c.v.begin() + i, c.v.end());
            return {std::move(left), std::move(right)};
        }
    }
    throw CannotSplit("turn never reaches pi");  // unreachable for valid input
}

}  // namespace polysimp
