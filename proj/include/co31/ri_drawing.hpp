#pragma once

#include <functional>
#include <vector>

#include "co31/embedding.hpp"
#include "co31/error.hpp"
#include "co31/ordering.hpp"
#include "co31/rational.hpp"

namespace co31 {

struct Point {
    Rational x, y;

    bool operator==(const Point&) const = default;
};

struct PointDrawing {
    std::vector<Point> points;

    bool operator==(const PointDrawing&) const = default;
};

struct RiStep {
    std::size_t cell;
    const std::vector<Vertex>& previous_chain;  // chain of G_{k-1}, empty for V1
    std::size_t a, b;                           // attachment span on it
    const std::vector<Vertex>& added;           // new vertices, chain order
    const std::vector<Vertex>& chain;           // chain of G_k
    const std::vector<Point>& points;           // entries of absent vertices are unset
};

using RiObserver = std::function<void(const RiStep&)>;

/// Weak closed rectangle-of-influence drawing of G - (u1, u2).
PointDrawing build_ri_drawing(const Embedding& g, const CanonicalOrdering& o,
                              const RiObserver& observer = {});

/// Exact checks: distinct points, no two edges of G - e meeting outside a
/// shared endpoint, and every edge's closed bounding box free of other
/// vertices.
Report verify_ri(const Embedding& g, Edge e, const PointDrawing& p);

/// Closed axis-parallel box spanned by `a` and `b` contains `p`.
bool in_closed_box(const Point& a, const Point& b, const Point& p);

}  // namespace co31
