#pragma once

#include <span>
#include <vector>

#include "co31/embedding.hpp"

namespace co31 {

/// A plane graph whose outer face is a simple cycle and whose inner faces
/// are triangles.
///
/// `outer` is the boundary in clockwise order c1..cl with u1 = c1 and
/// u2 = cl, so that (u1, u2) is a boundary edge. `embedding.outer` holds the
/// same cycle counterclockwise, starting u1, u2. `labels` maps each vertex
/// to its id in the graph the disk was cut from.
struct TriangulatedDisk {
    Embedding embedding;
    std::vector<Vertex> outer;
    std::vector<Vertex> labels;

    int size() const { return embedding.size(); }
    Vertex u1() const { return outer.front(); }
    Vertex u2() const { return outer.back(); }
};

/// Outer face is a simple cycle and every other face is a triangle.
bool is_triangulated_disk(const Embedding& e);

/// Wraps an embedding as a disk, taking u1 = e.outer[0] and u2 = e.outer[1].
/// Throws Error(precondition) if `e` is not a triangulated disk.
TriangulatedDisk make_disk(Embedding e);

/// The subgraph of a triangulation induced by `keep`, viewed as a disk whose
/// boundary is the face on the left of u2 -> u1 (u1, u2 taken from
/// `g.outer`). Labels are ids in `g`. Throws Error(precondition) when that
/// boundary is not simple or the result is not a triangulated disk.
TriangulatedDisk induced_disk(const Embedding& g, std::span<const Vertex> keep);

/// The disk left after deleting the outer-face vertex u3 of a triangulation.
TriangulatedDisk disk_without_top(const Embedding& triangulation);

/// No chord on the outer cycle and every 3-cycle bounds a face.
bool is_internally_4_connected(const TriangulatedDisk& d);

/// Deletes outer vertices `s` (not u1 or u2) and recomputes the outer cycle.
/// Throws Error(precondition) on a bad `s` and Error(structural) when what
/// is left is not a triangulated disk.
TriangulatedDisk remove_outer_set(const TriangulatedDisk& d, std::span<const Vertex> s);

}  // namespace co31
