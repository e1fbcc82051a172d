#include "co31/ri_drawing.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <tuple>

#include "chain.hpp"

namespace co31 {

namespace {

struct IntPoint {
    BigInt x, y;
};

int orient(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
    const BigInt cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

bool within(const IntPoint& a, const IntPoint& b, const IntPoint& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y
           && p.y <= std::max(a.y, b.y);
}

// Segments p1p2 and q1q2 have at least one point in common.
bool meet(const IntPoint& p1, const IntPoint& p2, const IntPoint& q1, const IntPoint& q2) {
    const int o1 = orient(p1, p2, q1);
    const int o2 = orient(p1, p2, q2);
    const int o3 = orient(q1, q2, p1);
    const int o4 = orient(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within(p1, p2, q1)) || (o2 == 0 && within(p1, p2, q2))
           || (o3 == 0 && within(q1, q2, p1)) || (o4 == 0 && within(q1, q2, p2));
}

std::vector<IntPoint> common_denominator(const std::vector<Point>& pts) {
    BigInt lx = 1;
    BigInt ly = 1;
    for (const auto& p : pts) {
        lx = boost::multiprecision::lcm(lx, den(p.x));
        ly = boost::multiprecision::lcm(ly, den(p.y));
    }
    std::vector<IntPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back({num(p.x) * (lx / den(p.x)), num(p.y) * (ly / den(p.y))});
    return out;
}

std::string edge_name(Vertex u, Vertex v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

}  // namespace

bool in_closed_box(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y
           && p.y <= std::max(a.y, b.y);
}

PointDrawing build_ri_drawing(const Embedding& g, const CanonicalOrdering& o, const RiObserver& observer) {
    detail::ChainTracker tracker(g, o);
    PointDrawing d;
    d.points.resize(g.size());
    {
        const auto& chain = tracker.chain();
        d.points[chain[0]] = Point{0, 2};
        d.points[chain[1]] = Point{1, 1};
        d.points[chain[2]] = Point{2, 0};
        if (observer) observer(RiStep{0, {}, 0, 0, chain, chain, d.points});
    }
    auto& pts = d.points;
    for (std::size_t k = 1; k < o.cells.size(); ++k) {
        const std::vector<Vertex> c = tracker.chain();
        const auto ins = tracker.insert(o.cells[k]);
        const std::size_t a = ins.a;
        const std::size_t b = ins.b;
        if (!ins.fan) {
            pts[ins.added[0]] = Point{(pts[c[b - 1]].x + pts[c[b]].x) / 2, (pts[c[a]].y + pts[c[a + 1]].y) / 2};
        } else {
            const Point& mid = pts[c[a + 1]];
            const Rational dx = pts[c[b]].x - mid.x;
            const Rational dy = pts[c[a]].y - mid.y;
            const long long f = static_cast<long long>(ins.added.size());
            for (long long h = 1; h <= f; ++h) {
                pts[ins.added[h - 1]] = Point{mid.x + Rational(h, f + 1) * dx, mid.y + Rational(f - h + 1, f + 1) * dy};
            }
        }
        if (observer) observer(RiStep{k, c, a, b, ins.added, tracker.chain(), pts});
    }
    return d;
}

Report verify_ri(const Embedding& g, Edge e, const PointDrawing& p) {
    const int n = g.size();
    if (static_cast<int>(p.points.size()) != n) return Report::fail("drawing does not cover every vertex");
    const auto pts = common_denominator(p.points);

    {
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return std::tie(pts[a].x, pts[a].y) < std::tie(pts[b].x, pts[b].y);
        });
        for (int t = 0; t + 1 < n; ++t) {
            if (pts[order[t]].x == pts[order[t + 1]].x && pts[order[t]].y == pts[order[t + 1]].y) {
                return Report::fail("vertices " + edge_name(order[t], order[t + 1]) + " share a point");
            }
        }
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : g.rotation[u]) {
            if (u < v && !((u == e.u && v == e.v) || (u == e.v && v == e.u))) edges.emplace_back(u, v);
        }
    }

    for (const auto& [u, v] : edges) {
        for (Vertex w = 0; w < n; ++w) {
            if (w != u && w != v && within(pts[u], pts[v], pts[w])) {
                return Report::fail("rectangle of edge " + edge_name(u, v) + " contains vertex " + std::to_string(w));
            }
        }
    }

    for (std::size_t s = 0; s < edges.size(); ++s) {
        const auto [a, b] = edges[s];
        for (std::size_t t = s + 1; t < edges.size(); ++t) {
            const auto [c, d] = edges[t];
            std::optional<std::array<Vertex, 3>> shared;
            if (a == c) shared = std::array<Vertex, 3>{a, b, d};
            else if (a == d) shared = std::array<Vertex, 3>{a, b, c};
            else if (b == c) shared = std::array<Vertex, 3>{b, a, d};
            else if (b == d) shared = std::array<Vertex, 3>{b, a, c};
            bool bad = false;
            if (shared) {
                const auto& [o, x, y] = *shared;
                const IntPoint& po = pts[o];
                const BigInt dot = (pts[x].x - po.x) * (pts[y].x - po.x) + (pts[x].y - po.y) * (pts[y].y - po.y);
                bad = orient(po, pts[x], pts[y]) == 0 && dot.sign() > 0;
            } else {
                bad = meet(pts[a], pts[b], pts[c], pts[d]);
            }
            if (bad) return Report::fail("edges " + edge_name(a, b) + " and " + edge_name(c, d) + " cross");
        }
    }
    return Report::pass();
}

}  // namespace co31
