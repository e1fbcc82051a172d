#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "co31/disk.hpp"
#include "co31/embedding.hpp"
#include "co31/error.hpp"

namespace co31 {

/// Path c_i - center - c_j with i < j - 1 and `center` an inner vertex.
/// Indices are 0-based positions in TriangulatedDisk::outer.
struct TwoLeg {
    int i = 0;
    Vertex center = 0;
    int j = 0;

    bool operator==(const TwoLeg&) const = default;
};

enum class LegKind { basic, complex };

/// One set V' removed from a disk by a peel step.
struct Step {
    enum class Kind { singleton, fan };

    Kind kind = Kind::singleton;
    std::vector<Vertex> vertices;  // fan members in outer-cycle order
    Vertex apex = -1;              // fans only
};

/// One cell V_k of a (3,1)-canonical ordering.
struct Cell {
    enum class Kind { base, singleton, fan, top };

    Kind kind = Kind::singleton;
    std::vector<Vertex> vertices;  // base: {u1, u2, z}
    Vertex apex = -1;

    bool operator==(const Cell&) const = default;
};

struct CanonicalOrdering {
    std::vector<Cell> cells;

    std::size_t size() const { return cells.size(); }
    bool operator==(const CanonicalOrdering&) const = default;
};

const char* to_string(Cell::Kind kind);

std::vector<TwoLeg> find_two_legs(const TriangulatedDisk& d);

/// Whether `y` lies strictly inside the region cut off by a 2-leg of `x`.
/// Throws Error(precondition) unless both are 2-leg centres.
bool dominates(const TriangulatedDisk& d, Vertex x, Vertex y);

/// A 2-leg centre that dominates no other centre.
Vertex minimal_center(const TriangulatedDisk& d);

LegKind classify_two_leg(const TriangulatedDisk& d, const TwoLeg& leg);

/// One peeling step: a singleton or fan of outer vertices, avoiding u1 and
/// u2, whose removal leaves an internally 4-connected disk. Requires an
/// internally 4-connected disk with at least four vertices.
Step peel(const TriangulatedDisk& d);

/// Builds the ordering by peeling G - u3 down to a triangle. Rejects with
/// Error(precondition) anything that is not a 4-connected triangulation.
CanonicalOrdering compute_31_ordering(const Embedding& g);

struct VerifyOrderingOptions {
    /// Above this many vertices the brute-force 3-connectivity test on G_k is
    /// replaced by checking that G_k is an internally 4-connected disk.
    int brute_force_limit = 200;
};

Report verify_ordering(const Embedding& g, const CanonicalOrdering& o,
                       const VerifyOrderingOptions& options = {});

/// Every vertex except u3 has a neighbour in a strictly later cell.
Report check_later_neighbors(const Embedding& g, const CanonicalOrdering& o);

}  // namespace co31
