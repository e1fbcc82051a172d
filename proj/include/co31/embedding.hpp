#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace co31 {

using Vertex = int;
using Face = std::vector<Vertex>;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
};

/// A simple plane graph given by its rotation system.
///
/// `rotation[v]` lists the neighbours of `v` in counterclockwise order.
/// `outer` lists the vertices of the outer face in counterclockwise order as
/// drawn in the plane; for a triangulation this is `{u1, u2, u3}`.
///
/// Face tracing keeps the face on the left of every directed edge, so inner
/// faces come out counterclockwise and the outer face comes out as
/// `reverse(outer)`.
struct Embedding {
    std::vector<std::vector<Vertex>> rotation;
    std::vector<Vertex> outer;

    int size() const { return static_cast<int>(rotation.size()); }
    std::size_t edge_count() const;
    int degree(Vertex v) const { return static_cast<int>(rotation[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    bool operator==(const Embedding&) const = default;
};

/// Every face exactly once, each as the cyclic vertex sequence met when
/// walking with the face on the left. Throws Error(invalid_embedding) when
/// adjacency is asymmetric, has loops or repeated neighbours, or an index is
/// out of range.
std::vector<Face> trace_faces(const Embedding& e);

/// Checks every Embedding invariant: symmetric simple adjacency, Euler's
/// formula for a connected plane graph, and `outer` being a traced face.
/// Throws Error(invalid_embedding) naming the violated condition.
void validate(const Embedding& e);

/// True iff `face` equals some rotation of `cycle`.
bool same_cycle(std::span<const Vertex> face, std::span<const Vertex> cycle);

/// Builds a rotation system from consistently oriented faces (each listed
/// counterclockwise, i.e. with its interior on the left, the outer face
/// included and listed clockwise). `outer` is stored as given.
Embedding embedding_from_faces(int n, const std::vector<Face>& faces,
                               std::vector<Vertex> outer);

struct TriangulationCheck {
    bool ok = false;
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// m = 3n - 6, simple, and every traced face has length 3.
TriangulationCheck is_triangulation(const Embedding& e);

struct InducedSubgraph {
    Embedding embedding;
    std::vector<Vertex> to_parent;    // new id -> parent id
    std::vector<Vertex> from_parent;  // parent id -> new id, or -1
};

/// Restriction of the rotation system to `keep`, preserving cyclic order.
/// Vertex ids are compacted in increasing parent order. The outer face is
/// left empty for the caller to fill in.
InducedSubgraph induced_subgraph(const Embedding& e, std::span<const Vertex> keep);

/// Brute force: true iff |V| > k and deleting any k-1 vertices leaves the
/// graph connected. Intended as an oracle; cost grows as n^(k-1).
bool is_k_connected(const Embedding& e, int k);

/// Same oracle on the subgraph induced by `mask` (one flag per vertex).
bool is_k_connected(const Embedding& e, std::span<const char> mask, int k);

/// All 3-cycles of the graph, each as an ascending triple.
std::vector<std::array<Vertex, 3>> triangles(const Embedding& e);

/// Requires a triangulation (throws Error(precondition) otherwise).
bool has_separating_triangle(const Embedding& e);

/// Third vertex of the face on the left of the directed edge u -> v.
Vertex left_face_apex(const Embedding& e, Vertex u, Vertex v);

}  // namespace co31
