#include "co31/disk.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "co31/error.hpp"

namespace co31 {

namespace {

// Face on the left of u -> v, listed from u.
std::vector<Vertex> trace_left_face(const Embedding& e, Vertex u, Vertex v) {
    std::vector<Vertex> face;
    const std::size_t limit = 2 * e.edge_count();
    Vertex a = u;
    Vertex b = v;
    do {
        face.push_back(a);
        if (face.size() > limit) throw Error(ErrorCode::internal, "face walk does not close");
        const Vertex c = left_face_apex(e, a, b);
        a = b;
        b = c;
    } while (a != u || b != v);
    return face;
}

std::vector<Vertex> ccw_from_clockwise(const std::vector<Vertex>& cw) {
    std::vector<Vertex> ccw{cw.front()};
    ccw.insert(ccw.end(), cw.rbegin(), cw.rend() - 1);
    return ccw;
}

// Builds a disk on `sub` whose boundary is the face left of u2 -> u1.
TriangulatedDisk disk_from_subgraph(InducedSubgraph sub, Vertex u1, Vertex u2,
                                    const std::vector<Vertex>& parent_labels, ErrorCode on_failure) {
    const Vertex a = sub.from_parent[u1];
    const Vertex b = sub.from_parent[u2];
    if (a < 0 || b < 0 || !sub.embedding.adjacent(a, b)) {
        throw Error(on_failure, "u1 and u2 must survive as an edge");
    }
    auto face = trace_left_face(sub.embedding, b, a);
    std::rotate(face.begin(), face.begin() + 1, face.end());  // start at u1, end at u2

    std::vector<Vertex> sorted = face;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(on_failure, "outer boundary is not a simple cycle");
    }

    TriangulatedDisk d;
    d.embedding = std::move(sub.embedding);
    d.embedding.outer = ccw_from_clockwise(face);
    d.outer = std::move(face);
    d.labels.reserve(sub.to_parent.size());
    for (Vertex p : sub.to_parent) d.labels.push_back(parent_labels[p]);
    if (!is_triangulated_disk(d.embedding)) {
        throw Error(on_failure, "result is not a triangulated disk");
    }
    return d;
}

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    return ids;
}

}  // namespace

bool is_triangulated_disk(const Embedding& e) {
    try {
        validate(e);
    } catch (const Error&) {
        return false;
    }
    std::vector<Vertex> boundary(e.outer.rbegin(), e.outer.rend());
    std::vector<Vertex> sorted = boundary;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() < 3 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    bool skipped_outer = false;
    for (const auto& face : trace_faces(e)) {
        if (!skipped_outer && same_cycle(face, boundary)) {
            skipped_outer = true;
            continue;
        }
        if (face.size() != 3) return false;
    }
    return skipped_outer;
}

TriangulatedDisk make_disk(Embedding e) {
    if (!is_triangulated_disk(e)) throw Error(ErrorCode::precondition, "not a triangulated disk");
    TriangulatedDisk d;
    d.outer.push_back(e.outer.front());
    d.outer.insert(d.outer.end(), e.outer.rbegin(), e.outer.rend() - 1);
    d.labels = identity(e.size());
    d.embedding = std::move(e);
    return d;
}

TriangulatedDisk induced_disk(const Embedding& g, std::span<const Vertex> keep) {
    if (g.outer.size() < 2) throw Error(ErrorCode::precondition, "outer face must name u1 and u2");
    return disk_from_subgraph(induced_subgraph(g, keep), g.outer[0], g.outer[1], identity(g.size()),
                              ErrorCode::precondition);
}

TriangulatedDisk disk_without_top(const Embedding& g) {
    if (g.outer.size() != 3) throw Error(ErrorCode::precondition, "outer face must be a triangle");
    const Vertex u3 = g.outer[2];
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (v != u3) keep.push_back(v);
    }
    return induced_disk(g, keep);
}

bool is_internally_4_connected(const TriangulatedDisk& d) {
    const auto& e = d.embedding;
    const int len = static_cast<int>(d.outer.size());
    std::vector<int> pos(e.size(), -1);
    for (int p = 0; p < len; ++p) pos[d.outer[p]] = p;
    for (int p = 0; p < len; ++p) {
        for (Vertex w : e.rotation[d.outer[p]]) {
            const int q = pos[w];
            if (q < 0) continue;
            const int gap = std::abs(p - q);
            if (gap != 1 && gap != len - 1) return false;  // chord
        }
    }
    std::set<std::array<Vertex, 3>> facial;
    for (const auto& f : trace_faces(e)) {
        if (f.size() != 3) continue;
        std::array<Vertex, 3> t{f[0], f[1], f[2]};
        std::sort(t.begin(), t.end());
        facial.insert(t);
    }
    for (const auto& t : triangles(e)) {
        if (!facial.count(t)) return false;
    }
    return true;
}

TriangulatedDisk remove_outer_set(const TriangulatedDisk& d, std::span<const Vertex> s) {
    if (s.empty()) throw Error(ErrorCode::precondition, "nothing to remove");
    const int n = d.size();
    std::vector<char> drop(n, 0);
    std::vector<char> on_outer(n, 0);
    for (Vertex c : d.outer) on_outer[c] = 1;
    for (Vertex v : s) {
        if (v < 0 || v >= n) throw Error(ErrorCode::precondition, "vertex out of range");
        if (v == d.u1() || v == d.u2()) throw Error(ErrorCode::precondition, "cannot remove u1 or u2");
        if (!on_outer[v]) {
            throw Error(ErrorCode::precondition, "vertex " + std::to_string(v) + " is not on the outer cycle");
        }
        if (drop[v]) throw Error(ErrorCode::precondition, "vertex listed twice");
        drop[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v) {
        if (!drop[v]) keep.push_back(v);
    }
    if (keep.size() < 3) throw Error(ErrorCode::structural, "fewer than three vertices would remain");
    return disk_from_subgraph(induced_subgraph(d.embedding, keep), d.u1(), d.u2(), d.labels,
                              ErrorCode::structural);
}

}  // namespace co31
