#include "co31/svg.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace co31 {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 24.0;

// Maps model coordinates onto the canvas; the y axis is flipped here only.
struct Viewport {
    double x0, y0, scale, height;

    double x(const Rational& v) const { return kMargin + (to_double(v) - x0) * scale; }
    double y(const Rational& v) const { return kMargin + height - (to_double(v) - y0) * scale; }
};

Viewport fit(double x0, double y0, double x1, double y1) {
    const double span = std::max({x1 - x0, y1 - y0, 1e-9});
    const double scale = kCanvas / span;
    return {x0, y0, scale, (y1 - y0) * scale};
}

void open_svg(std::ostringstream& os, const Viewport& vp, double width) {
    os << std::fixed << std::setprecision(3);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + 2 * kMargin << "\" height=\""
       << vp.height + 2 * kMargin << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string rect_dual_svg(const RectLayout& layout) {
    const auto& b = layout.bbox;
    const Viewport vp = fit(to_double(b.x_lo), to_double(b.y_lo), to_double(b.x_hi), to_double(b.y_hi));
    std::ostringstream os;
    open_svg(os, vp, to_double(b.width()) * vp.scale);
    for (std::size_t v = 0; v < layout.rects.size(); ++v) {
        const Rect& r = layout.rects[v];
        const double x = vp.x(r.x_lo);
        const double y = vp.y(r.y_hi);
        const double w = vp.x(r.x_hi) - x;
        const double h = vp.y(r.y_lo) - y;
        const int hue = static_cast<int>((v * 47) % 360);
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
           << "\" fill=\"hsl(" << hue << ",60%,80%)\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << x + w / 2 << "\" y=\"" << y + h / 2
           << "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string ri_svg(const Embedding& g, Edge removed, const PointDrawing& p, bool influence_boxes) {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    for (std::size_t v = 0; v < p.points.size(); ++v) {
        const double x = to_double(p.points[v].x);
        const double y = to_double(p.points[v].y);
        if (v == 0) {
            x0 = x1 = x;
            y0 = y1 = y;
        }
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    const Viewport vp = fit(x0, y0, x1, y1);
    std::ostringstream os;
    open_svg(os, vp, (x1 - x0) * vp.scale);

    auto is_removed = [&](Vertex u, Vertex v) {
        return (u == removed.u && v == removed.v) || (u == removed.v && v == removed.u);
    };
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v : g.rotation[u]) {
            if (v <= u || is_removed(u, v)) continue;
            const Point& a = p.points[u];
            const Point& b = p.points[v];
            if (influence_boxes) {
                const double xl = vp.x(std::min(a.x, b.x));
                const double xr = vp.x(std::max(a.x, b.x));
                const double yt = vp.y(std::max(a.y, b.y));
                const double yb = vp.y(std::min(a.y, b.y));
                os << "<rect x=\"" << xl << "\" y=\"" << yt << "\" width=\"" << xr - xl << "\" height=\"" << yb - yt
                   << "\" fill=\"steelblue\" fill-opacity=\"0.08\" stroke=\"steelblue\" stroke-opacity=\"0.3\"/>\n";
            }
            os << "<line x1=\"" << vp.x(a.x) << "\" y1=\"" << vp.y(a.y) << "\" x2=\"" << vp.x(b.x) << "\" y2=\""
               << vp.y(b.y) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
    }
    for (std::size_t v = 0; v < p.points.size(); ++v) {
        const double x = vp.x(p.points[v].x);
        const double y = vp.y(p.points[v].y);
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"crimson\"/>\n";
        os << "<text x=\"" << x + 4 << "\" y=\"" << y - 4 << "\" font-size=\"10\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace co31
