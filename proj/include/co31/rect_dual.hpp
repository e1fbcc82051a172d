#pragma once

#include <functional>
#include <vector>

#include "co31/embedding.hpp"
#include "co31/error.hpp"
#include "co31/ordering.hpp"
#include "co31/rational.hpp"

namespace co31 {

struct Rect {
    Rational x_lo, y_lo, x_hi, y_hi;

    Rational width() const { return x_hi - x_lo; }
    Rational height() const { return y_hi - y_lo; }
    Rational area() const { return width() * height(); }

    bool operator==(const Rect&) const = default;
};

/// One rectangle per vertex, indexed by vertex id.
struct RectLayout {
    std::vector<Rect> rects;
    Rect bbox;

    bool operator==(const RectLayout&) const = default;
};

/// State after each cell has been placed, for invariant checks.
struct RectStep {
    std::size_t cell;                 // index into the ordering
    const std::vector<Vertex>& chain; // outer chain c1..cl of G_k
    const RectLayout& layout;         // rectangles of G_k so far
    const Rational& top;              // current bounding box top
};

using RectObserver = std::function<void(const RectStep&)>;

/// Rectangular dual of G - (u1, u2). Cells are stacked one unit at a time on
/// the top side of the drawing; fans split the exposed top of their apex
/// into equal widths.
RectLayout build_rect_dual(const Embedding& g, const CanonicalOrdering& o,
                           const RectObserver& observer = {});

/// Exact checks: positive-size rectangles inside the bounding box, pairwise
/// interior-disjoint, areas summing to the box, and positive-length contacts
/// equal to the edges of G - e.
Report verify_rect_dual(const Embedding& g, Edge e, const RectLayout& layout);

/// Same layout multiplied through by the least common denominator.
RectLayout scale_to_integers(const RectLayout& layout);

}  // namespace co31
