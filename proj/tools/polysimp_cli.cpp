// Command-line front end: generate, subsume, verify, query, stats, bench.
// Exit codes: 0 success, 1 validation/input error, 2 internal invariant breach.
#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polysimp/generate.hpp"
#include "polysimp/geodesic.hpp"
#include "polysimp/io.hpp"
#include "polysimp/subsume.hpp"
#include "polysimp/svg.hpp"

using namespace polysimp;

namespace {

Point parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("point must be x,y");
    return Point(rational_from_string(s.substr(0, comma)),
                 rational_from_string(s.substr(comma + 1)));
}

Point random_interior(std::mt19937_64& rng, const Polygon& p, const Triangulation& t) {
    std::uniform_int_distribution<std::size_t> dt(0, t.tris.size() - 1);
    std::uniform_int_distribution<long> dw(1, 7);
    const auto& tr = t.tris[dt(rng)];
    Rational w0(dw(rng)), w1(dw(rng)), w2(dw(rng));
    Rational s = w0 + w1 + w2;
    return Point((w0 * p.v[tr[0]].x + w1 * p.v[tr[1]].x + w2 * p.v[tr[2]].x) / s,
                 (w0 * p.v[tr[0]].y + w1 * p.v[tr[1]].y + w2 * p.v[tr[2]].y) / s);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_gen(const std::string& out, std::size_t hull, std::uint64_t seed, long scale,
            const std::vector<std::size_t>& dips, const std::vector<std::size_t>& stairs) {
    GenSpec gs;
    gs.hull_vertices = hull;
    gs.seed = seed;
    gs.scale = scale;
    for (std::size_t k : dips) gs.dents.push_back({DentStyle::convex_dip, k});
    for (std::size_t d : stairs) gs.dents.push_back({DentStyle::staircase, d});
    auto q = generate(gs);
    write_file(out, emit_region(q));
    std::cout << "wrote " << out << ": n=" << q.outer.size() << " r=" << reflex_count(q.outer)
              << "\n";
    return 0;
}

int cmd_subsume(const std::string& in, const std::string& out, const std::string& report,
                const std::string& svg) {
    auto q = parse_region(read_file(in));
    auto res = subsume(q);
    if (res.report.warning_r_zero)
        std::cerr << "warning: input has no reflex vertices; output equals input\n";
    write_file(out, emit_region(res.region));
    if (!report.empty()) write_file(report, report_to_json(res.report).dump(2) + "\n");
    if (!svg.empty()) write_file(svg, render_svg(q, &res.region));
    std::cout << report_to_json(res.report).dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& in, std::size_t pairs, std::uint64_t seed) {
    auto q = parse_region(read_file(in));
    auto res = subsume(q);
    auto bad = verify_subsumption(q, res);
    std::size_t mismatches = 0, sampled = 0;
    if (q.holes.empty() && !res.report.warning_r_zero && pairs > 0) {
        auto t = triangulate(q.outer);
        auto tp = triangulate(res.region.outer);
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < pairs; ++i) {
            Point a = random_interior(rng, q.outer, t);
            Point b = random_interior(rng, q.outer, t);
            auto ga = geodesic_path(q.outer, t, a, b);
            auto gb = geodesic_path(res.region.outer, tp, a, b);
            ++sampled;
            if (ga.vertices != gb.vertices) ++mismatches;
        }
    }
    if (mismatches) bad.push_back(std::to_string(mismatches) + " geodesic mismatches");
    for (const auto& m : bad) std::cout << "FAIL " << m << "\n";
    std::cout << (bad.empty() ? "OK" : "FAILED") << ": n=" << res.report.n
              << " r=" << res.report.r << " total_out=" << res.report.total_out
              << " geodesic_pairs=" << sampled << "\n";
    return bad.empty() ? 0 : 1;
}

int cmd_query(const std::string& in, const std::string& from, const std::string& to,
              bool oracle) {
    auto q = parse_region(read_file(in));
    if (!q.holes.empty()) throw ParseError("query supports hole-free polygons only");
    Point a = parse_point(from), b = parse_point(to);
    auto t = triangulate(q.outer);
    auto g = geodesic_path(q.outer, t, a, b);
    for (const Point& v : g.vertices)
        std::cout << rational_to_string(v.x) << "," << rational_to_string(v.y) << "\n";
    std::cout << "length " << g.length << "\n";
    if (oracle) {
        VisibilityOracle vo(q.outer);
        auto want = vo.path(a, b);
        if (want.vertices != g.vertices) {
            std::cerr << "oracle disagrees with the funnel path\n";
            return 2;
        }
        std::cout << "oracle agrees\n";
    }
    return 0;
}

int cmd_stats(const std::string& in) {
    auto q = parse_region(read_file(in));
    nlohmann::json j;
    j["n"] = q.total_vertices();
    j["r"] = region_reflex_count(q);
    j["holes"] = q.holes.size();
    if (reflex_count(q.outer) > 0) {
        Hull h = convex_hull(q.outer);
        auto decomp = extract_pockets(q.outer, h);
        j["hull_vertices"] = h.indices.size();
        j["pockets"] = decomp.pockets.size();
        nlohmann::json lens = nlohmann::json::array();
        for (const auto& pk : decomp.pockets) lens.push_back(pk.chain_length(q.outer));
        j["pocket_chain_lengths"] = lens;
    } else {
        j["hull_vertices"] = q.outer.size();
        j["pockets"] = 0;
        j["pocket_chain_lengths"] = nlohmann::json::array();
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t reflex, std::uint64_t seed,
              std::size_t pairs) {
    for (std::size_t n : sizes) {
        GenSpec gs;
        gs.seed = seed;
        gs.scale = 100000000;
        // split the reflex budget over depth-5 dips plus a remainder dent
        std::size_t points = 0;
        for (std::size_t left = reflex; left > 0;) {
            std::size_t d = std::min<std::size_t>(left, 5);
            gs.dents.push_back({DentStyle::convex_dip, d});
            points += d;
            left -= d;
        }
        if (n <= points + 3) throw ParseError("size too small for the reflex budget");
        gs.hull_vertices = n - points;
        auto q = generate(gs);

        auto t0 = std::chrono::steady_clock::now();
        auto res = subsume(q);
        double t_subsume = seconds_since(t0);

        auto t = triangulate(q.outer);
        auto tp = triangulate(res.region.outer);
        std::mt19937_64 rng(seed ^ n);
        std::vector<std::pair<Point, Point>> qs;
        for (std::size_t i = 0; i < pairs; ++i)
            qs.emplace_back(random_interior(rng, q.outer, t), random_interior(rng, q.outer, t));
        t0 = std::chrono::steady_clock::now();
        for (const auto& [a, b] : qs) geodesic_path(q.outer, t, a, b);
        double per_p = seconds_since(t0) / pairs;
        t0 = std::chrono::steady_clock::now();
        for (const auto& [a, b] : qs) geodesic_path(res.region.outer, tp, a, b);
        double per_pp = seconds_since(t0) / pairs;

        nlohmann::json rec{{"n", q.outer.size()},
                           {"r", reflex_count(q.outer)},
                           {"wall_time_subsume", t_subsume},
                           {"wall_time_per_query_P", per_p},
                           {"wall_time_per_query_Pprime", per_pp},
                           {"output_total", res.report.total_out}};
        std::cout << rec.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convex-chain subsumption toolkit"};
    app.require_subcommand(1);

    std::string in, out, report, svg, from, to;
    std::size_t hull = 20, pairs = 16, reflex = 20;
    std::uint64_t seed = 0;
    long scale = 1000000;
    bool oracle = false;
    std::vector<std::size_t> dips, stairs, sizes;

    auto* gen = app.add_subcommand("gen", "generate a random polygon");
    gen->add_option("-o,--out", out, "output JSON file")->required();
    gen->add_option("--hull", hull, "convex hull vertex count");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--scale", scale, "coordinate bounding box");
    gen->add_option("--dip", dips, "add a convex-dip dent of this depth (repeatable)");
    gen->add_option("--stair", stairs, "add a staircase dent of this depth (repeatable)");

    auto* sub = app.add_subcommand("subsume", "compute the subsuming polygon");
    sub->add_option("input", in, "input JSON file")->required();
    sub->add_option("-o,--out", out, "output JSON file")->required();
    sub->add_option("--report", report, "write the counting report to this JSON file");
    sub->add_option("--svg", svg, "render before/after to this SVG file");

    auto* ver = app.add_subcommand("verify", "run the invariant suite on one instance");
    ver->add_option("input", in, "input JSON file")->required();
    ver->add_option("--pairs", pairs, "geodesic sample pairs");
    ver->add_option("--seed", seed, "sampling seed");

    auto* qry = app.add_subcommand("query", "geodesic shortest path between two points");
    qry->add_option("input", in, "input JSON file")->required();
    qry->add_option("--from", from, "start point x,y")->required();
    qry->add_option("--to", to, "end point x,y")->required();
    qry->add_flag("--oracle", oracle, "cross-check with the visibility-graph oracle");

    auto* st = app.add_subcommand("stats", "hull/pocket statistics");
    st->add_option("input", in, "input JSON file")->required();

    auto* ben = app.add_subcommand("bench", "timing harness, JSON lines on stdout");
    ben->add_option("--sizes", sizes, "polygon sizes")->required();
    ben->add_option("--reflex", reflex, "reflex vertex budget");
    ben->add_option("--seed", seed, "generator seed");
    ben->add_option("--pairs", pairs, "geodesic query pairs per size");

    CLI11_PARSE(app, argc, argv);
    try {
        if (gen->parsed()) return cmd_gen(out, hull, seed, scale, dips, stairs);
        if (sub->parsed()) return cmd_subsume(in, out, report, svg);
        if (ver->parsed()) return cmd_verify(in, pairs, seed);
        if (qry->parsed()) return cmd_query(in, from, to, oracle);
        if (st->parsed()) return cmd_stats(in);
        if (ben->parsed()) return cmd_bench(sizes, reflex, seed, pairs);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const GenerationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const GeometryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
