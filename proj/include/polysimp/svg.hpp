#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>

#include "polysimp/polygon.hpp"

namespace polysimp {

namespace detail {

inline void svg_path(std::ostringstream& out, const PolygonWithHoles& q, const char* style) {
    out << "  <path fill-rule=\"evenodd\" " << style << " d=\"";
    auto ring = [&](const Polygon& p) {
        for (std::size_t i = 0; i < p.size(); ++i)
            out << (i == 0 ? "M " : "L ") << to_double(p.v[i].x) << ' ' << -to_double(p.v[i].y)
                << ' ';
        out << "Z ";
    };
    ring(q.outer);
    for (const Polygon& h : q.holes) ring(h);
    out << "\"/>\n";
}

}  // namespace detail

// Original region dashed over the (optional) subsuming region drawn solid.
// Coordinates are doubles; this output is presentation-only. The y axis is
// flipped so the picture matches the mathematical orientation.
inline std::string render_svg(const PolygonWithHoles& before,
                              const PolygonWithHoles* after = nullptr) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto visit = [&](const PolygonWithHoles& q) {
        auto ring = [&](const Polygon& p) {
            for (const Point& v : p.v) {
                double x = to_double(v.x), y = -to_double(v.y);
                xmin = std::min(xmin, x);
                xmax = std::max(xmax, x);
                ymin = std::min(ymin, y);
                ymax = std::max(ymax, y);
            }
        };
        ring(q.outer);
        for (const Polygon& h : q.holes) ring(h);
    };
    visit(before);
    if (after) visit(*after);
    double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
    double mx = 0.05 * w, my = 0.05 * h;
    double sw = std::max(w, h) / 200.0;  // stroke width relative to extent

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (xmin - mx) << ' '
        << (ymin - my) << ' ' << (w + 2 * mx) << ' ' << (h + 2 * my) << "\">\n";
    if (after) {
        std::string solid = "fill=\"#cfe8cf\" stroke=\"#2a7a2a\" stroke-width=\"" +
                            std::to_string(sw) + "\"";
        detail::svg_path(out, *after, solid.c_str());
    }
    std::string dashed = "fill=\"none\" stroke=\"#444\" stroke-width=\"" + std::to_string(sw) +
                         "\" stroke-dasharray=\"" + std::to_string(3 * sw) + ' ' +
                         std::to_string(2 * sw) + "\"";
    detail::svg_path(out, before, dashed.c_str());
    out << "</svg>\n";
    return out.str();
}

}  // namespace polysimp
