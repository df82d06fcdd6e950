#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace polysimp {

// Exact rational scalar. Always stored canonical: denominator > 0, lowest terms.
using Rational = mpq_class;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : GeometryError {
    using GeometryError::GeometryError;
};

inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

// Serialized form: "p" for integers, "p/q" in lowest terms with q > 0 otherwise.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char c : s) {
        if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw ParseError("bad rational literal: " + s);
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

struct Point {
    Rational x, y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // lexicographic, for canonical orderings only
    bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

namespace detail {

// Fast path: values that are plain integers small enough for int128 cross products.
inline bool small_int(const Rational& q, int64_t& out) {
    const auto* raw = q.get_mpq_t();
    if (mpz_cmp_ui(mpq_denref(raw), 1) != 0) return false;
    if (!mpz_fits_slong_p(mpq_numref(raw))) return false;
    long v = mpz_get_si(mpq_numref(raw));
    if (v > (int64_t(1) << 60) || v < -(int64_t(1) << 60)) return false;
    out = v;
    return true;
}

inline int sign128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace detail

// Sign of (b-a) x (c-a): +1 left turn (ccw), 0 collinear, -1 right turn. Exact.
inline int orient(const Point& a, const Point& b, const Point& c) {
    int64_t ax, ay, bx, by, cx, cy;
    if (detail::small_int(a.x, ax) && detail::small_int(a.y, ay) &&
        detail::small_int(b.x, bx) && detail::small_int(b.y, by) &&
        detail::small_int(c.x, cx) && detail::small_int(c.y, cy)) {
        __int128 d = (__int128)(bx - ax) * (cy - ay) - (__int128)(by - ay) * (cx - ax);
        return detail::sign128(d);
    }
    Rational d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(d);
}

inline Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline Rational dot(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

// Sign of cross(d1, d2) for direction vectors given as point differences.
inline int cross_sign(const Point& d1_from, const Point& d1_to, const Point& d2_from,
                      const Point& d2_to) {
    int64_t ax, ay, bx, by, cx, cy, dx, dy;
    if (detail::small_int(d1_from.x, ax) && detail::small_int(d1_from.y, ay) &&
        detail::small_int(d1_to.x, bx) && detail::small_int(d1_to.y, by) &&
        detail::small_int(d2_from.x, cx) && detail::small_int(d2_from.y, cy) &&
        detail::small_int(d2_to.x, dx) && detail::small_int(d2_to.y, dy)) {
        __int128 v = (__int128)(bx - ax) * (dy - cy) - (__int128)(by - ay) * (dx - cx);
        return detail::sign128(v);
    }
    Rational v = (d1_to.x - d1_from.x) * (d2_to.y - d2_from.y) -
                 (d1_to.y - d1_from.y) * (d2_to.x - d2_from.x);
    return sign(v);
}

// p on the closed segment [a, b]?
inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    return sign(dot(p, a, b)) <= 0;  // p between a and b (inclusive)
}

struct Ray {
    Point origin;
    Point through;

    Ray(Point o, Point t) : origin(std::move(o)), through(std::move(t)) {
        if (origin == through) throw GeometryError("degenerate ray");
    }
};

// Unique point on both rays (non-negative parameter on each), if any.
// Parallel supporting lines, including collinear overlap, yield nullopt.
inline std::optional<Point> ray_intersection(const Ray& r1, const Ray& r2) {
    Rational d1x = r1.through.x - r1.origin.x, d1y = r1.through.y - r1.origin.y;
    Rational d2x = r2.through.x - r2.origin.x, d2y = r2.through.y - r2.origin.y;
    Rational denom = d1x * d2y - d1y * d2x;
    if (sign(denom) == 0) return std::nullopt;
    Rational ox = r2.origin.x - r1.origin.x, oy = r2.origin.y - r1.origin.y;
    Rational t = (ox * d2y - oy * d2x) / denom;
    Rational s = (ox * d1y - oy * d1x) / denom;
    if (sign(t) < 0 || sign(s) < 0) return std::nullopt;
    return Point(r1.origin.x + t * d1x, r1.origin.y + t * d1y);
}

// True iff the closed segments share a point that is not a shared endpoint.
inline bool segments_properly_intersect(const Point& a1, const Point& a2, const Point& b1,
                                        const Point& b2) {
    int d1 = orient(a1, a2, b1);
    int d2 = orient(a1, a2, b2);
    int d3 = orient(b1, b2, a1);
    int d4 = orient(b1, b2, a2);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && d2 == 0) {
        // collinear: compare parameter intervals along the common line
        Rational len = dot(a1, a2, a2);
        Rational t1 = dot(a1, a2, b1);
        Rational t2 = dot(a1, a2, b2);
        if (t1 > t2) std::swap(t1, t2);
        Rational lo = t1 < 0 ? Rational(0) : t1;
        Rational hi = t2 > len ? len : t2;
        return lo < hi;  // overlap of positive length; single-point overlap is endpoint contact
    }
    auto interior_touch = [](const Point& p, const Point& s1, const Point& s2) {
        return on_segment(p, s1, s2) && p != s1 && p != s2;
    };
    if (d1 == 0 && interior_touch(b1, a1, a2)) return true;
    if (d2 == 0 && interior_touch(b2, a1, a2)) return true;
    if (d3 == 0 && interior_touch(a1, b1, b2)) return true;
    if (d4 == 0 && interior_touch(a2, b1, b2)) return true;
    return false;
}

// Strict transversal crossing: interiors cross at exactly one point.
inline bool segments_cross_transversally(const Point& a1, const Point& a2, const Point& b1,
                                         const Point& b2) {
    int d1 = orient(a1, a2, b1);
    int d2 = orient(a1, a2, b2);
    if (d1 * d2 >= 0) return false;
    int d3 = orient(b1, b2, a1);
    int d4 = orient(b1, b2, a2);
    return d3 * d4 < 0;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline double distance_d(const Point& a, const Point& b) {
    double dx = to_double(b.x - a.x);
    double dy = to_double(b.y - a.y);
    return std::sqrt(dx * dx + dy * dy);
}

}  // namespace polysimp
