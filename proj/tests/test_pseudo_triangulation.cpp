#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "polysimp/chain.hpp"
#include "polysimp/hull.hpp"
#include "polysimp/oracle.hpp"
#include "polysimp/spt.hpp"

using namespace polysimp;
using testutil::poly;
using testutil::pt;

namespace {

std::size_t convex_count(const Polygon& p) { return p.size() - reflex_count(p); }

void check_spt_against_oracle(const Polygon& p, std::size_t source) {
    auto t = triangulate(p);
    auto spt = shortest_path_tree(p, t, source);
    VisibilityOracle vo(p);
    for (std::size_t v = 0; v < p.size(); ++v) {
        std::vector<Point> mine;
        for (std::size_t i : spt.path_to(v)) mine.push_back(p.v[i]);
        auto want = vo.path(p.v[source], p.v[v]).vertices;
        CHECK(canonicalize_path(mine) == want);
    }
}

void check_pt_shape(const Polygon& p, std::size_t source) {
    auto t = triangulate(p);
    auto spt = shortest_path_tree(p, t, source);
    auto ppt = pointed_pt(p, spt);
    std::size_t c = convex_count(p);
    CHECK(ppt.faces.size() == c - 2);
    CHECK(ppt.diagonals.size() == c - 3);
    CHECK(all_pointed(p, ppt));
    for (const auto& f : ppt.faces)
        for (int s = 0; s < 3; ++s) {
            auto side = f.side_chain(s);
            Chain ch;
            for (std::size_t i : side) ch.v.push_back(p.v[i]);
            CHECK(is_simplifiable(ch));
        }
}

}  // namespace

TEST_CASE("SPT of a convex polygon is a star") {
    Polygon hexagon = poly({{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}});
    auto t = triangulate(hexagon);
    for (std::size_t s = 0; s < hexagon.size(); ++s) {
        auto spt = shortest_path_tree(hexagon, t, s);
        for (std::size_t v = 0; v < hexagon.size(); ++v)
            if (v != s) CHECK(spt.parent[v] == s);
    }
}

TEST_CASE("SPT of the pocket hexagon from its lid endpoint is a star") {
    Polygon p = poly({{0, 10}, {2, 6}, {4, 5}, {6, 5}, {8, 6}, {10, 10}});
    auto t = triangulate(p);
    auto spt = shortest_path_tree(p, t, 5);  // (10,10)
    for (std::size_t v = 0; v < 5; ++v) CHECK(spt.parent[v] == 5);
}

TEST_CASE("SPT matches the Dijkstra oracle") {
    check_spt_against_oracle(poly({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}}), 0);
    check_spt_against_oracle(poly({{0, 0}, {8, 0}, {8, 4}, {6, 1}, {4, 4}, {2, 1}, {0, 4}}), 0);
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        Polygon p = testutil::random_star(rng, 12 + it * 9);
        check_spt_against_oracle(p, it % p.size());
    }
}

TEST_CASE("pointed PT counts on fixed shapes") {
    // square from a corner: c=4, one diagonal, two faces
    Polygon sq = poly({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    auto spt = shortest_path_tree(sq, triangulate(sq), 0);
    auto ppt = pointed_pt(sq, spt);
    CHECK(ppt.diagonals.size() == 1);
    CHECK(ppt.faces.size() == 2);

    // convex hexagon: c=6, three diagonals, four faces
    Polygon hx = poly({{0, 10}, {2, 6}, {4, 5}, {6, 5}, {8, 6}, {10, 10}});
    check_pt_shape(hx, 5);

    // triangle: single face, no diagonals
    Polygon tr = poly({{0, 4}, {2, 1}, {4, 4}});
    auto spt3 = shortest_path_tree(tr, triangulate(tr), 0);
    auto p3 = pointed_pt(tr, spt3);
    CHECK(p3.diagonals.empty());
    CHECK(p3.faces.size() == 1);
    CHECK(p3.faces[0].cycle.size() == 3);
    for (int s = 0; s < 3; ++s) CHECK(p3.faces[0].side_chain(s).size() == 2);
}

TEST_CASE("pointed PT on pocket polygons of random inputs") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 15; ++it) {
        Polygon p = testutil::random_star(rng, 20 + it * 10);
        auto d = extract_pockets(p, convex_hull(p));
        for (const auto& pk : d.pockets) {
            Polygon pp = pk.pocket_polygon(p);
            if (pp.size() < 3) continue;
            check_pt_shape(pp, 0);  // index 0 is a lid endpoint, convex
        }
    }
}

TEST_CASE("side chain sizes on a one-reflex pseudo-triangle") {
    // quad with one reflex vertex: a single pseudo-triangle once source sees all
    Polygon q = poly({{0, 0}, {8, 0}, {4, 6}, {3, 2}});
    REQUIRE(reflex_count(q) == 1);
    auto spt = shortest_path_tree(q, triangulate(q), 0);
    auto ppt = pointed_pt(q, spt);
    REQUIRE(ppt.faces.size() == 1);
    std::vector<std::size_t> sizes;
    for (int s = 0; s < 3; ++s) sizes.push_back(ppt.faces[0].side_chain(s).size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 2, 3});
}
