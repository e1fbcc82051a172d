#pragma once

// Fixtures and independent oracles shared by the unit and acceptance tests.
// Nothing here calls into the code under test except to build inputs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "co31/disk.hpp"
#include "co31/embedding.hpp"
#include "co31/generator.hpp"
#include "co31/ordering.hpp"

namespace co31::testing {

// double_wheel(4) under the usual octahedron names: outer triangle a, b, c,
// inner triangle d, e, f with e opposite c.
struct OctahedronNames {
    static constexpr Vertex a = 0, b = 1, c = 4, d = 3, e = 5, f = 2;
};

inline Embedding octahedron() { return double_wheel(4); }

struct P2 {
    double x, y;
};

// Triangulated disk or triangulation from straight-line coordinates. Each
// triangle is oriented counterclockwise by its coordinates; `outer_ccw` is
// the boundary in plane order starting u1, u2.
inline Embedding from_triangles(const std::vector<P2>& pts, std::vector<std::array<Vertex, 3>> tris,
                                std::vector<Vertex> outer_ccw) {
    std::vector<Face> faces;
    for (auto t : tris) {
        const P2 &p = pts[t[0]], &q = pts[t[1]], &r = pts[t[2]];
        const double cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
        if (cross < 0) std::swap(t[1], t[2]);
        faces.push_back({t[0], t[1], t[2]});
    }
    faces.emplace_back(outer_ccw.rbegin(), outer_ccw.rend());
    return embedding_from_faces(static_cast<int>(pts.size()), faces, outer_ccw);
}

// One center x low in the disk with two side-by-side centers y, y' above it.
// Boundary c0..c6 clockwise, u1 = c0, u2 = c6.
struct NestedCenters {
    static constexpr Vertex c0 = 0, c1 = 1, c2 = 2, c3 = 3, c4 = 4, c5 = 5, c6 = 6, x = 7, y = 8, y2 = 9;

    static TriangulatedDisk disk() {
        const std::vector<P2> pts = {{0, 0}, {0, 2}, {1, 4}, {3, 5}, {5, 4}, {6, 2}, {6, 0}, {3, 1}, {1.5, 3}, {4.5, 3}};
        const std::vector<std::array<Vertex, 3>> tris = {
            {x, c0, c1}, {x, c1, y}, {x, y, y2}, {x, y2, c5}, {x, c5, c6}, {x, c6, c0},
            {y, c1, c2}, {y, c2, c3}, {y, c3, y2}, {y2, c3, c4}, {y2, c4, c5}};
        return make_disk(from_triangles(pts, tris, {c0, c6, c5, c4, c3, c2, c1}));
    }
};

// A single center x whose every 2-leg is complex: c2 has two inner
// neighbours w1, w2, neither of which is a center. Boundary c0..c4.
struct ComplexCenter {
    static constexpr Vertex c0 = 0, c1 = 1, c2 = 2, c3 = 3, c4 = 4, x = 5, w1 = 6, w2 = 7;

    static TriangulatedDisk disk() {
        const std::vector<P2> pts = {{0, 0}, {0, 3}, {2, 5}, {4, 3}, {4, 0}, {2, 1}, {1.4, 3}, {2.6, 3}};
        const std::vector<std::array<Vertex, 3>> tris = {
            {x, c0, c1}, {x, c1, w1}, {x, w1, w2}, {x, w2, c3}, {x, c3, c4}, {x, c4, c0},
            {c1, c2, w1}, {c2, w2, w1}, {c2, c3, w2}};
        return make_disk(from_triangles(pts, tris, {c0, c4, c3, c2, c1}));
    }
};

// Outer triangle c1 c2 c3 (u1 = c1, u2 = c3) around one inner vertex x = 3.
inline TriangulatedDisk four_vertex_disk() {
    const std::vector<P2> pts = {{0, 0}, {1, 2}, {2, 0}, {1, 0.7}};
    return make_disk(from_triangles(pts, {{{0, 1, 3}}, {{1, 2, 3}}, {{2, 0, 3}}}, {0, 2, 1}));
}

// Icosahedron: top 0, upper ring 1..5, lower ring 6..10, bottom 11.
inline Embedding icosahedron() {
    std::vector<Face> faces;
    auto up = [](int i) { return 1 + (i % 5); };
    auto lo = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, up(i), up(i + 1)});
        faces.push_back({up(i), lo(i), up(i + 1)});
        faces.push_back({up(i + 1), lo(i), lo(i + 1)});
        faces.push_back({11, lo(i + 1), lo(i)});
    }
    const Face& f = faces.front();
    return embedding_from_faces(12, faces, {f[2], f[1], f[0]});
}

// Octahedron with a second octahedron glued into the inner face (p, q, r):
// three new vertices inside that face, so (p, q, r) becomes separating.
inline Embedding stacked_octahedra() {
    const Embedding base = octahedron();
    std::vector<Face> faces = trace_faces(base);
    const std::vector<Vertex> outer_cw(base.outer.rbegin(), base.outer.rend());
    auto glued = std::find_if(faces.begin(), faces.end(), [&](const Face& f) { return !same_cycle(f, outer_cw); });
    const Vertex p = (*glued)[0], q = (*glued)[1], r = (*glued)[2];
    faces.erase(glued);
    // s, t, w sit near edges pq, qr, rp respectively.
    const Vertex s = 6, t = 7, w = 8;
    for (Face f : std::vector<Face>{{p, q, s}, {q, r, t}, {r, p, w}, {p, s, w}, {q, t, s}, {r, w, t}, {s, t, w}}) {
        faces.push_back(f);
    }
    return embedding_from_faces(9, faces, base.outer);
}

// ---------------------------------------------------------------------------
// Oracles

inline std::vector<std::vector<char>> adjacency_matrix(const Embedding& e) {
    std::vector<std::vector<char>> adj(e.size(), std::vector<char>(e.size(), 0));
    for (Vertex v = 0; v < e.size(); ++v) {
        for (Vertex w : e.rotation[v]) adj[v][w] = 1;
    }
    return adj;
}

// Faces by a direct walk: from (u, v) go to (v, w) where w precedes u in the
// rotation of v. Linear scans only, no shared code with trace_faces.
inline std::vector<Face> naive_faces(const Embedding& e) {
    std::set<std::pair<Vertex, Vertex>> used;
    std::vector<Face> faces;
    for (Vertex u = 0; u < e.size(); ++u) {
        for (Vertex v : e.rotation[u]) {
            if (used.count({u, v})) continue;
            Face face;
            Vertex a = u, b = v;
            while (used.insert({a, b}).second) {
                face.push_back(a);
                const auto& rot = e.rotation[b];
                std::size_t k = 0;
                while (rot[k] != a) ++k;
                const Vertex next = rot[(k + rot.size() - 1) % rot.size()];
                a = b;
                b = next;
            }
            faces.push_back(face);
        }
    }
    return faces;
}

// Canonical form of a face: rotation starting at its smallest vertex.
inline Face canonical(Face f) {
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    return f;
}

inline std::set<Face> face_set(const std::vector<Face>& faces) {
    std::set<Face> out;
    for (const Face& f : faces) out.insert(canonical(f));
    return out;
}

inline std::set<std::array<Vertex, 3>> brute_triangles(const Embedding& e) {
    const auto adj = adjacency_matrix(e);
    std::set<std::array<Vertex, 3>> out;
    const int n = e.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c]) out.insert({a, b, c});
    return out;
}

inline bool brute_separating_triangle(const Embedding& e) {
    std::set<std::array<Vertex, 3>> facial;
    for (Face f : naive_faces(e)) {
        if (f.size() != 3) continue;
        std::sort(f.begin(), f.end());
        facial.insert({f[0], f[1], f[2]});
    }
    for (const auto& t : brute_triangles(e)) {
        if (!facial.count(t)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Corpora

// Random 4-connected triangulations with sizes cycling through [lo, hi].
inline std::vector<Embedding> random_corpus(int count, int lo, int hi, std::uint64_t seed0 = 1000) {
    std::vector<Embedding> out;
    for (int k = 0; k < count; ++k) {
        const int n = lo + (k * 7) % (hi - lo + 1);
        out.push_back(random_4ct(n, seed0 + static_cast<std::uint64_t>(k)));
    }
    return out;
}

// G - u3 and every disk met while peeling it down to a triangle.
inline std::vector<TriangulatedDisk> peel_sequence(const Embedding& g) {
    std::vector<TriangulatedDisk> out{disk_without_top(g)};
    while (out.back().size() >= 4) {
        out.push_back(remove_outer_set(out.back(), peel(out.back()).vertices));
    }
    return out;
}

}  // namespace co31::testing
