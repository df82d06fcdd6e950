#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "polysimp/chain.hpp"
#include "polysimp/hull.hpp"
#include "polysimp/spt.hpp"

namespace polysimp {

struct Report {
    std::size_t n = 0, r = 0, pockets = 0, support_edges = 0;
    std::size_t convex_out = 0, total_out = 0, holes = 0;
    bool warning_r_zero = false;
};

struct ChainReplacement {
    Point first, last;
    std::size_t original_interior_count = 0;
    std::vector<Point> replacement;  // full new chain including endpoints
};

struct SubsumptionResult {
    PolygonWithHoles region;
    std::vector<ChainReplacement> replacements;
    Report report;
};

namespace detail {

// boundary rewrite: vertices strictly between from and to (walking forward)
// are replaced by the interior points
struct Repl {
    std::size_t from, to;
    std::vector<Point> interior;
};

// Simplify one convex chain of polygon indices, splitting recursively while its
// total turn is pi or more. Chains that cannot be split are a contract breach.
inline void simplify_ids(const Polygon& q, const std::vector<std::size_t>& ids,
                         std::vector<Repl>& out) {
    // Recurse on index ranges and materialize points only at the leaves, so
    // the work stays linear in the chain length however often it splits.
    auto rec = [&](auto&& self, std::size_t lo, std::size_t hi) -> void {
        if (hi - lo < 4) return;
        const Point& a0 = q.v[ids[lo]];
        const Point& a1 = q.v[ids[lo + 1]];
        int dir = orient(q.v[ids[lo]], q.v[ids[lo + 1]], q.v[ids[lo + 2]]);
        // split first: once the accumulated turn reaches pi the end-ray
        // shortcut is no longer sound (a closed convex cycle would collapse
        // to its seam)
        for (std::size_t i = lo + 1; i + 1 < hi; ++i) {
            if (cross_sign(a0, a1, q.v[ids[i]], q.v[ids[i + 1]]) * dir <= 0) {
                self(self, lo, i + 1);
                self(self, i, hi);
                return;
            }
        }
        Chain c;
        c.v.reserve(hi - lo);
        for (std::size_t i = lo; i < hi; ++i) c.v.push_back(q.v[ids[i]]);
        if (!is_simplifiable(c)) throw CannotSplit("sub-pi chain with non-crossing end rays");
        Chain s = simplify_chain(c);
        out.push_back({ids[lo], ids[hi - 1], {s.v[1]}});
    };
    rec(rec, 0, ids.size());
}

inline std::vector<Point> assemble(const Polygon& q, const std::vector<Repl>& repls) {
    const std::size_t n = q.size();
    std::vector<bool> dropped(n, false);
    std::map<std::size_t, const Repl*> at_from;
    for (const auto& r : repls) {
        at_from[r.from] = &r;
        for (std::size_t i = q.next(r.from); i != r.to; i = q.next(i)) dropped[i] = true;
    }
    std::size_t start = n;
    for (std::size_t i = 0; i < n && start == n; ++i)
        if (!dropped[i]) start = i;
    assert(start < n);
    std::vector<Point> out;
    std::size_t i = start;
    do {
        out.push_back(q.v[i]);
        auto it = at_from.find(i);
        if (it != at_from.end()) {
            const Repl& r = *it->second;
            out.insert(out.end(), r.interior.begin(), r.interior.end());
            i = r.to;
        } else {
            i = q.next(i);
        }
    } while (i != start);
    return out;
}

struct PieceResult {
    std::vector<Repl> repls;  // indices into the piece polygon
    std::size_t diagonals = 0;
    std::size_t convex = 0;
};

// Pointed PT of one pocket or hole polygon, then simplify every maximal run of
// original boundary edges (no support edges) inside the side chains. lid_edge
// marks the closing edge (last,0) as a support edge for pockets.
inline PieceResult simplify_piece(const Polygon& piece, std::size_t source, bool lid_edge) {
    const std::size_t len = piece.size();
    PieceResult res;
    res.convex = len - reflex_count(piece);
    auto tri = triangulate(piece);
    auto spt = shortest_path_tree(piece, tri, source);
    auto ppt = pointed_pt(piece, spt);
    res.diagonals = ppt.diagonals.size();
    assert(ppt.faces.size() == res.convex - 2);
    assert(res.diagonals == res.convex - 3);

    auto is_support = [&](std::size_t u, std::size_t v) {
        bool adjacent = (u + 1) % len == v || (v + 1) % len == u;
        if (!adjacent) return true;  // a PT diagonal
        bool is_lid = (u == 0 && v == len - 1) || (v == 0 && u == len - 1);
        return lid_edge && is_lid;
    };
    std::set<std::pair<std::size_t, std::size_t>> seen;  // runs shared via corners
    for (const auto& f : ppt.faces) {
        for (int s = 0; s < 3; ++s) {
            auto side = f.side_chain(s);
            std::vector<std::size_t> run{side[0]};
            auto flush = [&]() {
                if (run.size() >= 4 && seen.insert({run.front(), run.back()}).second) {
                    Chain c;
                    for (std::size_t i : run) c.v.push_back(piece.v[i]);
                    Chain simp = simplify_chain(c);  // simplifiable by construction
                    res.repls.push_back({run.front(), run.back(), {simp.v[1]}});
                }
            };
            for (std::size_t k = 0; k + 1 < side.size(); ++k) {
                if (is_support(side[k], side[k + 1])) {
                    flush();
                    run = {side[k + 1]};
                } else {
                    run.push_back(side[k + 1]);
                }
            }
            flush();
        }
    }
    return res;
}

}  // namespace detail

// Main pipeline: pockets via pointed PT chain simplification, hull chains
// simplified directly, holes shrunk the same way from the inside.
inline SubsumptionResult subsume(const PolygonWithHoles& q) {
    SubsumptionResult res;
    res.report.n = q.total_vertices();
    res.report.r = region_reflex_count(q);
    res.report.holes = q.holes.size();
    if (res.report.r == 0) {
        res.region = q;
        res.report.warning_r_zero = true;
        res.report.total_out = res.report.n;
        res.report.convex_out = res.report.n;
        return res;
    }

    const Polygon& P = q.outer;
    const std::size_t n = P.size();
    Hull h = convex_hull(P);
    auto decomp = extract_pockets(P, h);
    res.report.pockets = decomp.pockets.size();
    res.report.support_edges = decomp.pockets.size();  // one lid each

    std::vector<detail::Repl> repls;
    for (const auto& pk : decomp.pockets) {
        Polygon pp = pk.pocket_polygon(P);
        auto piece = detail::simplify_piece(pp, 0, true);
        res.report.support_edges += piece.diagonals;
        // pocket index k corresponds to P index lid_to - k: forward in the
        // pocket is backward along P
        for (const auto& r : piece.repls) {
            detail::Repl mapped;
            mapped.from = pk.pocket_vertex(P, r.to);
            mapped.to = pk.pocket_vertex(P, r.from);
            mapped.interior = r.interior;
            repls.push_back(std::move(mapped));
        }
    }
    for (const auto& chain : decomp.chains) {
        if (chain.closed) {
            // convex outer cycle (reflex vertices all on holes): open it at
            // vertex 0 and let the recursive splitter cover the full turn
            std::vector<std::size_t> ids = chain.indices;
            ids.push_back(ids.front());
            detail::simplify_ids(P, ids, repls);
        } else {
            detail::simplify_ids(P, chain.indices, repls);
        }
    }
    for (const auto& r : repls) {
        ChainReplacement cr;
        cr.first = P.v[r.from];
        cr.last = P.v[r.to];
        cr.original_interior_count = (r.to + n - r.from) % n - 1;
        cr.replacement.push_back(cr.first);
        cr.replacement.insert(cr.replacement.end(), r.interior.begin(), r.interior.end());
        cr.replacement.push_back(cr.last);
        res.replacements.push_back(std::move(cr));
    }
    res.region.outer = canonicalize(detail::assemble(P, repls));

    for (const Polygon& hole : q.holes) {
        Polygon hccw = hole;
        std::reverse(hccw.v.begin(), hccw.v.end());
        if (reflex_count(hccw) == 0) {  // convex hole: nothing to shrink
            res.region.holes.push_back(hole);
            continue;
        }
        std::size_t source = 0;
        auto reflex = classify_reflex(hccw);
        while (reflex[source]) ++source;
        auto piece = detail::simplify_piece(hccw, source, false);
        res.report.support_edges += piece.diagonals;
        for (const auto& r : piece.repls) {
            ChainReplacement cr;
            cr.first = hccw.v[r.from];
            cr.last = hccw.v[r.to];
            cr.original_interior_count = (r.to + hccw.size() - r.from) % hccw.size() - 1;
            cr.replacement.push_back(cr.first);
            cr.replacement.insert(cr.replacement.end(), r.interior.begin(), r.interior.end());
            cr.replacement.push_back(cr.last);
            res.replacements.push_back(std::move(cr));
        }
        Polygon nh = canonicalize(detail::assemble(hccw, piece.repls));
        std::reverse(nh.v.begin(), nh.v.end());
        res.region.holes.push_back(std::move(nh));
    }

    res.report.total_out = res.region.total_vertices();
    res.report.convex_out = res.report.total_out - region_reflex_count(res.region);
    return res;
}

// Exact post-checks shared by the verify verb and the test suites. Returns
// human-readable failure messages; empty means all checks passed.
inline std::vector<std::string> verify_subsumption(const PolygonWithHoles& in,
                                                   const SubsumptionResult& res) {
    std::vector<std::string> bad;
    const PolygonWithHoles& out = res.region;
    try {
        validate_region(out);
    } catch (const GeometryError& e) {
        bad.push_back(std::string("output region invalid: ") + e.what());
        return bad;
    }
    auto reflex_points = [](const PolygonWithHoles& q) {
        std::vector<Point> pts;
        auto add = [&](const Polygon& p) {
            auto r = classify_reflex(p);
            for (std::size_t i = 0; i < p.size(); ++i)
                if (r[i]) pts.push_back(p.v[i]);
        };
        add(q.outer);
        for (const auto& h : q.holes) add(h);
        std::sort(pts.begin(), pts.end());
        return pts;
    };
    if (reflex_points(in) != reflex_points(out)) bad.push_back("reflex vertex multisets differ");
    if (in.holes.size() != out.holes.size()) bad.push_back("hole count changed");

    for (std::size_t i = 0; i < out.outer.size(); ++i)
        for (std::size_t j = 0; j < in.outer.size(); ++j)
            if (segments_cross_transversally(out.outer.v[i], out.outer.v[out.outer.next(i)],
                                             in.outer.v[j], in.outer.v[in.outer.next(j)])) {
                bad.push_back("output outer boundary crosses the input boundary");
                i = out.outer.size();
                break;
            }
    for (const Point& v : in.outer.v)
        if (side_of(out, v) == Side::exterior) {
            bad.push_back("input vertex left outside the output region");
            break;
        }
    for (std::size_t hi = 0; hi < out.holes.size() && hi < in.holes.size(); ++hi) {
        const Polygon& nh = out.holes[hi];
        const Polygon& oh = in.holes[hi];
        bool ok = true;
        for (const Point& v : nh.v)
            if (side_of_cycle(oh.v, v) == Side::exterior) ok = false;
        for (std::size_t i = 0; i < nh.size() && ok; ++i)
            for (std::size_t j = 0; j < oh.size(); ++j)
                if (segments_cross_transversally(nh.v[i], nh.v[nh.next(i)], oh.v[j],
                                                 oh.v[oh.next(j)]))
                    ok = false;
        if (!ok) bad.push_back("new hole " + std::to_string(hi) + " not inside the original");
    }
    const auto& rep = res.report;
    if (rep.r > 0) {
        if (rep.convex_out > 6 * rep.r + 2) bad.push_back("convex vertex bound 6r+2 exceeded");
        if (rep.total_out > 7 * rep.r + 2) bad.push_back("total vertex bound 7r+2 exceeded");
    }
    return bad;
}

}  // namespace polysimp
