#include "co31/rect_dual.hpp"

#include <algorithm>
#include <set>

#include "chain.hpp"

namespace co31 {

namespace {

Rational overlap(const Rational& lo1, const Rational& hi1, const Rational& lo2, const Rational& hi2) {
    return std::min(hi1, hi2) - std::max(lo1, lo2);
}

bool touches(const Rect& p, const Rect& q) {
    const bool side_x = p.x_hi == q.x_lo || q.x_hi == p.x_lo;
    const bool side_y = p.y_hi == q.y_lo || q.y_hi == p.y_lo;
    return (side_x && overlap(p.y_lo, p.y_hi, q.y_lo, q.y_hi) > 0)
           || (side_y && overlap(p.x_lo, p.x_hi, q.x_lo, q.x_hi) > 0);
}

std::string pair_name(Vertex u, Vertex v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

}  // namespace

RectLayout build_rect_dual(const Embedding& g, const CanonicalOrdering& o, const RectObserver& observer) {
    detail::ChainTracker tracker(g, o);
    RectLayout layout;
    layout.rects.resize(g.size());
    {
        const auto& chain = tracker.chain();
        for (std::size_t p = 0; p < chain.size(); ++p) {
            layout.rects[chain[p]] = Rect{Rational(p), Rational(0), Rational(p + 1), Rational(1)};
        }
    }
    Rational top = 1;
    layout.bbox = Rect{0, 0, 3, top};
    if (observer) observer(RectStep{0, tracker.chain(), layout, top});

    for (std::size_t k = 1; k < o.cells.size(); ++k) {
        const std::vector<Vertex> before = tracker.chain();
        const auto ins = tracker.insert(o.cells[k]);
        const Rational raised = top + 1;
        for (std::size_t p = 0; p <= ins.a; ++p) layout.rects[before[p]].y_hi = raised;
        for (std::size_t p = ins.b; p < before.size(); ++p) layout.rects[before[p]].y_hi = raised;

        const Rational left = layout.rects[before[ins.a]].x_hi;
        const Rational right = layout.rects[before[ins.b]].x_lo;
        const Rational width = (right - left) / static_cast<long long>(ins.added.size());
        for (std::size_t h = 0; h < ins.added.size(); ++h) {
            const Rational lo = left + width * static_cast<long long>(h);
            const Rational hi = h + 1 == ins.added.size() ? right : lo + width;
            layout.rects[ins.added[h]] = Rect{lo, top, hi, raised};
        }
        top = raised;
        layout.bbox.y_hi = top;
        if (observer) observer(RectStep{k, tracker.chain(), layout, top});
    }
    return layout;
}

Report verify_rect_dual(const Embedding& g, Edge e, const RectLayout& layout) {
    const int n = g.size();
    if (static_cast<int>(layout.rects.size()) != n) return Report::fail("layout does not cover every vertex");
    const Rect& box = layout.bbox;
    if (box.width() <= 0 || box.height() <= 0) return Report::fail("bounding box is empty");

    Rational area = 0;
    for (Vertex v = 0; v < n; ++v) {
        const Rect& r = layout.rects[v];
        if (r.width() <= 0 || r.height() <= 0) {
            return Report::fail("rectangle of " + std::to_string(v) + " has no interior");
        }
        if (r.x_lo < box.x_lo || r.x_hi > box.x_hi || r.y_lo < box.y_lo || r.y_hi > box.y_hi) {
            return Report::fail("rectangle of " + std::to_string(v) + " leaves the bounding box");
        }
        area += r.area();
    }

    std::set<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.rotation[u]) {
            if (u < v) edges.emplace(u, v);
        }
    }
    edges.erase({std::min(e.u, e.v), std::max(e.u, e.v)});

    for (Vertex u = 0; u < n; ++u) {
        const Rect& p = layout.rects[u];
        for (Vertex v = u + 1; v < n; ++v) {
            const Rect& q = layout.rects[v];
            if (overlap(p.x_lo, p.x_hi, q.x_lo, q.x_hi) > 0 && overlap(p.y_lo, p.y_hi, q.y_lo, q.y_hi) > 0) {
                return Report::fail("rectangles of " + pair_name(u, v) + " overlap");
            }
        }
    }
    if (area != box.area()) return Report::fail("rectangles do not tile the bounding box (area mismatch)");

    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const bool contact = touches(layout.rects[u], layout.rects[v]);
            const bool edge = edges.count({u, v}) != 0;
            if (contact && !edge) return Report::fail("contact " + pair_name(u, v) + " is not an edge of G - e");
            if (edge && !contact) return Report::fail("edge " + pair_name(u, v) + " has no contact");
        }
    }
    return Report::pass();
}

RectLayout scale_to_integers(const RectLayout& layout) {
    BigInt lcm = 1;
    auto absorb = [&](const Rational& r) { lcm = boost::multiprecision::lcm(lcm, den(r)); };
    auto each = [](const Rect& r, auto&& fn) {
        fn(r.x_lo);
        fn(r.y_lo);
        fn(r.x_hi);
        fn(r.y_hi);
    };
    each(layout.bbox, absorb);
    for (const auto& r : layout.rects) each(r, absorb);
    const Rational factor(lcm);
    auto scale = [&](const Rect& r) {
        return Rect{r.x_lo * factor, r.y_lo * factor, r.x_hi * factor, r.y_hi * factor};
    };
    RectLayout out;
    out.bbox = scale(layout.bbox);
    out.rects.reserve(layout.rects.size());
    for (const auto& r : layout.rects) out.rects.push_back(scale(r));
    return out;
}

}  // namespace co31
