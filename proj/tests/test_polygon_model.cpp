#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "polysimp/polygon.hpp"

using namespace polysimp;
using testutil::poly;
using testutil::pt;

namespace {
std::vector<Point> pts(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Point> v;
    for (auto [x, y] : xs) v.emplace_back(Rational(x), Rational(y));
    return v;
}
}  // namespace

TEST_CASE("canonicalize drops collinear vertices") {
    Polygon p = canonicalize(pts({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}}));
    REQUIRE(p.size() == 4);
    CHECK(p.v[0] == pt(0, 0));
    CHECK(p.v[1] == pt(4, 0));
    CHECK(p.v[2] == pt(4, 4));
    CHECK(p.v[3] == pt(0, 4));
}

TEST_CASE("canonicalize fixes orientation and rejects degenerates") {
    Polygon p = canonicalize(pts({{0, 0}, {0, 4}, {4, 4}, {4, 0}}));
    CHECK(sign(signed_area2(p.v)) > 0);
    CHECK_THROWS_AS(canonicalize(pts({{0, 0}, {1, 1}, {2, 2}})), DegeneratePolygon);
    CHECK_THROWS_AS(canonicalize(pts({{0, 0}, {0, 0}, {1, 1}})), DegeneratePolygon);
}

TEST_CASE("simplicity validation") {
    CHECK_NOTHROW(validate_simple(poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}})));
    CHECK_NOTHROW(validate_simple(poly({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}})));
    CHECK_THROWS_AS(validate_simple(poly({{0, 0}, {2, 2}, {2, 0}, {0, 2}})), NotSimple);
    // repeated vertex
    CHECK_THROWS_AS(validate_simple(poly({{0, 0}, {4, 0}, {4, 4}, {0, 0}, {0, 4}, {-2, 2}})),
                    NotSimple);
}

TEST_CASE("reflex classification") {
    Polygon sq = poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(reflex_count(sq) == 0);

    Polygon p5 = poly({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}});
    auto r = classify_reflex(p5);
    CHECK(reflex_count(p5) == 1);
    CHECK(r[3]);  // (2,1)

    // clockwise convex hole: every hole vertex is reflex in the region
    Polygon hex = poly({{2, 1}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 2}});
    REQUIRE(sign(signed_area2(hex.v)) < 0);
    CHECK(reflex_count(hex) == 6);
}

TEST_CASE("point in polygon") {
    Polygon p5 = poly({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}});
    CHECK(side_of_cycle(p5.v, pt(1, 2)) == Side::interior);
    CHECK(side_of_cycle(p5.v, pt(2, 2)) == Side::exterior);
    CHECK(side_of_cycle(p5.v, pt(2, 1)) == Side::boundary);
    CHECK(side_of_cycle(p5.v, pt(2, 0)) == Side::boundary);
    CHECK(side_of_cycle(p5.v, pt(9, 9)) == Side::exterior);
    // horizontal-edge grazing
    Polygon sq = poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(side_of_cycle(sq.v, pt(-1, 0)) == Side::exterior);
    CHECK(side_of_cycle(sq.v, pt(-1, 4)) == Side::exterior);
    CHECK(side_of_cycle(sq.v, pt(2, 2)) == Side::interior);
}

TEST_CASE("region with holes") {
    PolygonWithHoles q;
    q.outer = poly({{0, 0}, {10, 0}, {10, 10}, {0, 10}});
    q.holes.push_back(poly({{4, 4}, {4, 6}, {6, 6}, {6, 4}}));  // clockwise
    CHECK_NOTHROW(validate_region(q));
    CHECK(side_of(q, pt(5, 5)) == Side::exterior);  // inside the hole
    CHECK(side_of(q, pt(2, 2)) == Side::interior);
    CHECK(side_of(q, pt(4, 5)) == Side::boundary);
    CHECK(region_reflex_count(q) == 4);

    PolygonWithHoles bad = q;
    bad.holes[0] = poly({{4, 4}, {6, 4}, {6, 6}, {4, 6}});  // ccw hole
    CHECK_THROWS_AS(validate_region(bad), DegeneratePolygon);

    bad = q;
    bad.holes.push_back(poly({{8, 8}, {8, 12}, {9, 12}, {9, 8}}));  // pokes outside
    CHECK_THROWS_AS(validate_region(bad), DegeneratePolygon);
}
