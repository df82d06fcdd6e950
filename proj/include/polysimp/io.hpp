#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "polysimp/polygon.hpp"
#include "polysimp/subsume.hpp"

namespace polysimp {

namespace detail {

inline Rational coord_from_json(const nlohmann::json& j) {
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    throw ParseError("coordinate must be a rational string or an integer");
}

inline std::vector<Point> ring_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("ring must be an array of [x,y] pairs");
    std::vector<Point> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw ParseError("vertex must be an [x,y] pair");
        out.emplace_back(coord_from_json(e[0]), coord_from_json(e[1]));
    }
    return out;
}

inline nlohmann::json ring_to_json(const std::vector<Point>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const Point& p : v)
        out.push_back({rational_to_string(p.x), rational_to_string(p.y)});
    return out;
}

}  // namespace detail

// {"outer": [[x,y],...], "holes": [[[x,y],...],...]} with rational-string
// coordinates. Input is canonicalized and validated; holes may arrive in
// either orientation and are stored clockwise.
inline PolygonWithHoles parse_region(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("outer"))
        throw ParseError("document must be an object with an \"outer\" ring");
    PolygonWithHoles q;
    try {
        q.outer = canonicalize(detail::ring_from_json(j["outer"]));
        if (j.contains("holes")) {
            if (!j["holes"].is_array()) throw ParseError("\"holes\" must be an array of rings");
            for (const auto& h : j["holes"]) {
                Polygon hole = canonicalize(detail::ring_from_json(h));
                std::reverse(hole.v.begin(), hole.v.end());
                q.holes.push_back(std::move(hole));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad document shape: ") + e.what());
    }
    validate_region(q);
    return q;
}

inline std::string emit_region(const PolygonWithHoles& q) {
    nlohmann::json j;
    j["outer"] = detail::ring_to_json(q.outer.v);
    j["holes"] = nlohmann::json::array();
    for (const Polygon& h : q.holes) j["holes"].push_back(detail::ring_to_json(h.v));
    return j.dump(2) + "\n";
}

inline nlohmann::json report_to_json(const Report& r) {
    return {{"n", r.n},
            {"r", r.r},
            {"pockets", r.pockets},
            {"support_edges", r.support_edges},
            {"convex_out", r.convex_out},
            {"total_out", r.total_out},
            {"holes", r.holes},
            {"warning_r_zero", r.warning_r_zero}};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

}  // namespace polysimp
