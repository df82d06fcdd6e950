#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "polysimp/geom.hpp"

using namespace polysimp;
using testutil::pt;

TEST_CASE("rational parse and serialize round trip") {
    CHECK(rational_to_string(rational_from_string("3")) == "3");
    CHECK(rational_to_string(rational_from_string("-7/2")) == "-7/2");
    CHECK(rational_to_string(rational_from_string("4/8")) == "1/2");
    CHECK(rational_to_string(rational_from_string("-6/8")) == "-3/4");
    CHECK(rational_to_string(rational_from_string("0")) == "0");
    CHECK(rational_to_string(Rational(-5)) == "-5");
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
    CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
}

TEST_CASE("orient signs") {
    CHECK(orient(pt(0, 0), pt(1, 0), pt(0, 1)) == 1);
    CHECK(orient(pt(0, 0), pt(1, 1), pt(2, 2)) == 0);
    CHECK(orient(pt(0, 0), pt(1, 2), pt(3, 3)) == -1);
}

TEST_CASE("orient big-value fallback agrees with the int128 fast path") {
    // same configuration scaled far past the fast-path cutoff
    Rational big = Rational(1) << 80;
    Point a(Rational(0), Rational(0));
    Point b(big, big * 2);
    Point c(big * 3, big * 3);
    CHECK(orient(a, b, c) == -1);
    Point h(Rational(1, 3), Rational(2, 3));
    CHECK(orient(a, h, Point(Rational(1), Rational(2))) == 0);
}

TEST_CASE("on_segment") {
    CHECK(on_segment(pt(1, 1), pt(0, 0), pt(2, 2)));
    CHECK(on_segment(pt(0, 0), pt(0, 0), pt(2, 2)));
    CHECK_FALSE(on_segment(pt(3, 3), pt(0, 0), pt(2, 2)));
    CHECK_FALSE(on_segment(pt(1, 2), pt(0, 0), pt(2, 2)));
}

TEST_CASE("ray intersection") {
    auto hit = ray_intersection(Ray(pt(0, 0), pt(1, 2)), Ray(pt(5, 2), pt(3, 3)));
    REQUIRE(hit.has_value());
    CHECK(hit->x == Rational(9, 5));
    CHECK(hit->y == Rational(18, 5));

    CHECK_FALSE(ray_intersection(Ray(pt(0, 4), pt(0, 0)), Ray(pt(4, 4), pt(4, 0))).has_value());
    CHECK_FALSE(ray_intersection(Ray(pt(0, 0), pt(1, 0)), Ray(pt(5, 0), pt(6, 0))).has_value());
    // lines meet behind one origin
    CHECK_FALSE(ray_intersection(Ray(pt(0, 0), pt(1, 0)), Ray(pt(-2, 1), pt(-2, 2))).has_value());
    CHECK_THROWS_AS(Ray(pt(1, 1), pt(1, 1)), GeometryError);
}

TEST_CASE("segment intersection predicates") {
    CHECK(segments_properly_intersect(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    CHECK_FALSE(segments_properly_intersect(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 1)));
    CHECK(segments_properly_intersect(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)));
    // collinear, touching at one point only
    CHECK_FALSE(segments_properly_intersect(pt(0, 0), pt(2, 0), pt(2, 0), pt(4, 0)));
    // T-contact in the interior of one segment
    CHECK(segments_properly_intersect(pt(0, 0), pt(4, 0), pt(2, 0), pt(2, 3)));
    CHECK(segments_properly_intersect(pt(0, 0), pt(4, 0), pt(2, -1), pt(2, 0)));

    CHECK(segments_cross_transversally(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    CHECK_FALSE(segments_cross_transversally(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)));
    CHECK_FALSE(segments_cross_transversally(pt(0, 0), pt(4, 0), pt(2, 0), pt(2, 3)));
}

TEST_CASE("cross_sign on direction pairs") {
    CHECK(cross_sign(pt(0, 0), pt(1, 0), pt(0, 0), pt(0, 1)) == 1);
    CHECK(cross_sign(pt(0, 0), pt(0, 1), pt(0, 0), pt(1, 0)) == -1);
    CHECK(cross_sign(pt(0, 0), pt(2, 2), pt(5, 5), pt(6, 6)) == 0);
}
