#include "co31/embedding.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bitset.hpp"
#include "co31/error.hpp"

namespace co31 {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_embedding: return "invalid_embedding";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::structural: return "structural";
    case ErrorCode::format: return "format";
    case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

namespace {

[[noreturn]] void invalid(const std::string& what) {
    throw Error(ErrorCode::invalid_embedding, what);
}

std::uint64_t edge_key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32)
           | static_cast<std::uint32_t>(v);
}

// Half-edge view of a rotation system. Half-edge ids are offset[u] + k for
// the k-th entry of rotation[u]; back[h] is the index of u in the rotation
// of the head of h.
struct HalfEdges {
    std::vector<std::size_t> offset;
    std::vector<int> back;

    explicit HalfEdges(const Embedding& e) {
        const int n = e.size();
        offset.assign(n + 1, 0);
        for (Vertex v = 0; v < n; ++v) offset[v + 1] = offset[v] + e.rotation[v].size();
        back.assign(offset[n], -1);

        std::unordered_map<std::uint64_t, int> index;
        index.reserve(offset[n]);
        for (Vertex v = 0; v < n; ++v) {
            const auto& rot = e.rotation[v];
            for (std::size_t k = 0; k < rot.size(); ++k) {
                const Vertex w = rot[k];
                if (w < 0 || w >= n) {
                    invalid("vertex " + std::to_string(v) + " lists out-of-range neighbour "
                            + std::to_string(w));
                }
                if (w == v) invalid("loop at vertex " + std::to_string(v));
                if (!index.emplace(edge_key(v, w), static_cast<int>(k)).second) {
                    invalid("repeated neighbour " + std::to_string(w) + " at vertex "
                            + std::to_string(v));
                }
            }
        }
        for (Vertex v = 0; v < n; ++v) {
            const auto& rot = e.rotation[v];
            for (std::size_t k = 0; k < rot.size(); ++k) {
                auto it = index.find(edge_key(rot[k], v));
                if (it == index.end()) {
                    invalid("asymmetric adjacency: " + std::to_string(v) + " lists "
                            + std::to_string(rot[k]) + " but not conversely");
                }
                back[offset[v] + k] = it->second;
            }
        }
    }

    std::size_t count() const { return back.size(); }

    Vertex head(const Embedding& e, std::size_t h) const {
        const auto v = tail(h);
        return e.rotation[v][h - offset[v]];
    }

    Vertex tail(std::size_t h) const {
        return static_cast<Vertex>(std::upper_bound(offset.begin(), offset.end(), h)
                                   - offset.begin() - 1);
    }

    // Next half-edge around the face on the left of h.
    std::size_t next(const Embedding& e, std::size_t h) const {
        const Vertex v = head(e, h);
        const int deg = e.degree(v);
        const int k = (back[h] + deg - 1) % deg;
        return offset[v] + k;
    }
};

bool connected(const Embedding& e) {
    const int n = e.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : e.rotation[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace

std::size_t Embedding::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rotation) twice += r.size();
    return twice / 2;
}

bool Embedding::adjacent(Vertex u, Vertex v) const {
    const auto& a = rotation[u].size() <= rotation[v].size() ? rotation[u] : rotation[v];
    const Vertex other = rotation[u].size() <= rotation[v].size() ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

std::vector<Face> trace_faces(const Embedding& e) {
    const HalfEdges he(e);
    std::vector<char> used(he.count(), 0);
    std::vector<Face> faces;
    for (Vertex v = 0; v < e.size(); ++v) {
        for (std::size_t h0 = he.offset[v]; h0 < he.offset[v + 1]; ++h0) {
            if (used[h0]) continue;
            Face face;
            std::size_t h = h0;
            Vertex tail = v;
            do {
                used[h] = 1;
                face.push_back(tail);
                tail = he.head(e, h);
                h = he.next(e, h);
            } while (h != h0);
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

bool same_cycle(std::span<const Vertex> face, std::span<const Vertex> cycle) {
    if (face.size() != cycle.size() || face.empty()) return false;
    const auto it = std::find(face.begin(), face.end(), cycle[0]);
    if (it == face.end()) return false;
    const std::size_t start = static_cast<std::size_t>(it - face.begin());
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        if (face[(start + t) % face.size()] != cycle[t]) return false;
    }
    return true;
}

void validate(const Embedding& e) {
    if (e.size() < 3) invalid("need at least 3 vertices");
    const auto faces = trace_faces(e);
    if (!connected(e)) invalid("graph is not connected");
    const long long n = e.size();
    const long long m = static_cast<long long>(e.edge_count());
    const long long f = static_cast<long long>(faces.size());
    if (n - m + f != 2) {
        std::ostringstream os;
        os << "Euler check failed: n - m + f = " << n << " - " << m << " + " << f
           << " != 2 (rotation system is not planar)";
        invalid(os.str());
    }
    if (e.outer.empty()) invalid("outer face is empty");
    std::vector<Vertex> traced(e.outer.rbegin(), e.outer.rend());
    const bool found = std::any_of(faces.begin(), faces.end(),
                                   [&](const Face& face) { return same_cycle(face, traced); });
    if (!found) invalid("outer face is not a face of the embedding (expected counterclockwise order)");
}

Embedding embedding_from_faces(int n, const std::vector<Face>& faces, std::vector<Vertex> outer) {
    // succ[v][a] = b when b follows a counterclockwise around v.
    std::vector<std::unordered_map<Vertex, Vertex>> succ(n);
    for (const auto& face : faces) {
        const std::size_t k = face.size();
        for (std::size_t t = 0; t < k; ++t) {
            const Vertex prev = face[(t + k - 1) % k];
            const Vertex v = face[t];
            const Vertex next = face[(t + 1) % k];
            if (v < 0 || v >= n) invalid("face vertex out of range");
            if (!succ[v].emplace(next, prev).second) {
                invalid("half-edge " + std::to_string(v) + "->" + std::to_string(next)
                        + " appears in two faces");
            }
        }
    }
    Embedding e;
    e.rotation.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        if (succ[v].empty()) continue;
        Vertex start = std::min_element(succ[v].begin(), succ[v].end())->first;
        Vertex cur = start;
        do {
            e.rotation[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) invalid("faces around vertex " + std::to_string(v) + " do not close");
            cur = it->second;
        } while (cur != start && e.rotation[v].size() <= succ[v].size());
        if (e.rotation[v].size() != succ[v].size()) {
            invalid("faces around vertex " + std::to_string(v) + " form more than one cycle");
        }
    }
    e.outer = std::move(outer);
    return e;
}

TriangulationCheck is_triangulation(const Embedding& e) {
    try {
        validate(e);
    } catch (const Error& err) {
        return {false, err.what()};
    }
    const long long n = e.size();
    const long long m = static_cast<long long>(e.edge_count());
    if (m != 3 * n - 6) {
        return {false, "edge count " + std::to_string(m) + " != 3n - 6 = " + std::to_string(3 * n - 6)};
    }
    for (const auto& face : trace_faces(e)) {
        if (face.size() != 3) {
            return {false, "face of length " + std::to_string(face.size())};
        }
    }
    return {true, {}};
}

InducedSubgraph induced_subgraph(const Embedding& e, std::span<const Vertex> keep) {
    if (keep.empty()) throw Error(ErrorCode::precondition, "induced subgraph of an empty vertex set");
    InducedSubgraph out;
    out.from_parent.assign(e.size(), -1);
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (v < 0 || v >= e.size()) throw Error(ErrorCode::precondition, "vertex out of range");
        out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    out.embedding.rotation.resize(out.to_parent.size());
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        for (Vertex w : e.rotation[out.to_parent[i]]) {
            if (out.from_parent[w] >= 0) out.embedding.rotation[i].push_back(out.from_parent[w]);
        }
    }
    return out;
}

bool is_k_connected(const Embedding& e, int k) {
    const std::vector<char> all(e.size(), 1);
    return is_k_connected(e, all, k);
}

bool is_k_connected(const Embedding& e, std::span<const char> mask, int k) {
    if (k < 1 || k > 5) throw Error(ErrorCode::precondition, "connectivity order must be in 1..5");
    std::vector<Vertex> alive;
    for (Vertex v = 0; v < e.size(); ++v) {
        if (mask[v]) alive.push_back(v);
    }
    if (static_cast<int>(alive.size()) <= k) return false;

    const detail::AdjacencyBits adj(e);
    detail::Bits allowed(e.size());
    for (Vertex v : alive) allowed.set(v);

    // Deleting exactly k - 1 vertices suffices: any smaller separator can be
    // padded from a component with at least two vertices.
    std::vector<int> pick(k - 1);
    const int total = static_cast<int>(alive.size());
    const int r = k - 1;
    for (int t = 0; t < r; ++t) pick[t] = t;
    while (true) {
        for (int t : pick) allowed.reset(alive[t]);
        const bool ok = adj.connected(allowed);
        for (int t : pick) allowed.set(alive[t]);
        if (!ok) return false;
        int t = r - 1;
        while (t >= 0 && pick[t] == total - r + t) --t;
        if (t < 0) break;
        ++pick[t];
        for (int s = t + 1; s < r; ++s) pick[s] = pick[s - 1] + 1;
    }
    return true;
}

std::vector<std::array<Vertex, 3>> triangles(const Embedding& e) {
    const int n = e.size();
    std::vector<std::vector<Vertex>> sorted(n);
    for (Vertex v = 0; v < n; ++v) {
        sorted[v] = e.rotation[v];
        std::sort(sorted[v].begin(), sorted[v].end());
    }
    auto has = [&](Vertex a, Vertex b) {
        return std::binary_search(sorted[a].begin(), sorted[a].end(), b);
    };
    std::vector<std::array<Vertex, 3>> out;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : sorted[u]) {
            if (v <= u) continue;
            const bool u_smaller = sorted[u].size() <= sorted[v].size();
            const auto& scan = u_smaller ? sorted[u] : sorted[v];
            const Vertex other = u_smaller ? v : u;
            for (auto it = std::upper_bound(scan.begin(), scan.end(), v); it != scan.end(); ++it) {
                if (has(other, *it)) out.push_back({u, v, *it});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_separating_triangle(const Embedding& e) {
    if (auto check = is_triangulation(e); !check) {
        throw Error(ErrorCode::precondition, "not a triangulation: " + check.reason);
    }
    std::set<std::array<Vertex, 3>> facial;
    for (const auto& f : trace_faces(e)) {
        std::array<Vertex, 3> t{f[0], f[1], f[2]};
        std::sort(t.begin(), t.end());
        facial.insert(t);
    }
    for (const auto& t : triangles(e)) {
        if (!facial.count(t)) return true;
    }
    return false;
}

Vertex left_face_apex(const Embedding& e, Vertex u, Vertex v) {
    const auto& rot = e.rotation[v];
    const auto it = std::find(rot.begin(), rot.end(), u);
    if (it == rot.end()) {
        throw Error(ErrorCode::precondition,
                    std::to_string(u) + " and " + std::to_string(v) + " are not adjacent");
    }
    const std::size_t k = static_cast<std::size_t>(it - rot.begin());
    return rot[(k + rot.size() - 1) % rot.size()];
}

}  // namespace co31
