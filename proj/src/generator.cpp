#include "co31/generator.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <set>

#include "co31/error.hpp"

namespace co31 {

namespace {

using Rng = std::mt19937_64;

// Uniform in [0, bound); the standard distributions are not portable.
std::size_t below(Rng& rng, std::size_t bound) {
    const std::uint64_t limit = Rng::max() - Rng::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % bound);
}

void insert_after(std::vector<Vertex>& rot, Vertex anchor, Vertex v) {
    const auto it = std::find(rot.begin(), rot.end(), anchor);
    rot.insert(it + 1, v);
}

void erase_value(std::vector<Vertex>& rot, Vertex v) {
    rot.erase(std::find(rot.begin(), rot.end(), v));
}

// Triangulation held as a rotation system plus its face list during growth.
class Builder {
public:
    Builder() {
        // K4 with 3 inside the counterclockwise triangle 0, 1, 2.
        faces_ = {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}};
        e_.rotation = {{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}};
    }

    int size() const { return e_.size(); }
    Embedding& embedding() { return e_; }

    // Stacks a new vertex into face `f` = (a, b, c).
    void stack_into(std::size_t f) {
        const auto [a, b, c] = faces_[f];
        const Vertex w = e_.size();
        e_.rotation.push_back({a, b, c});
        insert_after(e_.rotation[a], b, w);
        insert_after(e_.rotation[b], c, w);
        insert_after(e_.rotation[c], a, w);
        faces_[f] = {a, b, w};
        faces_.push_back({b, c, w});
        faces_.push_back({c, a, w});
    }

    std::size_t face_count() const { return faces_.size(); }

    // Replaces edge (u, v) by the other diagonal of its two faces. Refuses
    // when the result would not be a simple triangulation with minimum
    // degree 3.
    bool flip(Vertex u, Vertex v) {
        const Vertex p = left_face_apex(e_, u, v);
        const Vertex q = left_face_apex(e_, v, u);
        if (p == q || e_.degree(u) <= 3 || e_.degree(v) <= 3 || e_.adjacent(p, q)) return false;
        erase_value(e_.rotation[u], v);
        erase_value(e_.rotation[v], u);
        insert_after(e_.rotation[p], u, q);
        insert_after(e_.rotation[q], v, p);
        return true;
    }

private:
    Embedding e_;
    std::vector<std::array<Vertex, 3>> faces_;
};

std::vector<std::array<Vertex, 3>> separating_triangles(const Embedding& e) {
    std::set<std::array<Vertex, 3>> facial;
    for (const auto& f : trace_faces(e)) {
        std::array<Vertex, 3> t{f[0], f[1], f[2]};
        std::sort(t.begin(), t.end());
        facial.insert(t);
    }
    std::vector<std::array<Vertex, 3>> out;
    for (const auto& t : triangles(e)) {
        if (!facial.count(t)) out.push_back(t);
    }
    return out;
}

std::pair<Vertex, Vertex> random_edge(const Embedding& e, Rng& rng) {
    const Vertex u = static_cast<Vertex>(below(rng, static_cast<std::size_t>(e.size())));
    const auto& rot = e.rotation[u];
    return {u, rot[below(rng, rot.size())]};
}

std::optional<Embedding> attempt(int n, Rng& rng, const RandomOptions& options) {
    Builder b;
    while (b.size() < n) b.stack_into(below(rng, b.face_count()));

    auto& e = b.embedding();
    const long long mixing = static_cast<long long>(options.mixing_flips_per_vertex) * n;
    for (long long t = 0; t < mixing; ++t) {
        const auto [u, v] = random_edge(e, rng);
        b.flip(u, v);
    }

    // Flip edges of separating triangles, keeping a flip only if it does not
    // increase their number.
    auto bad = separating_triangles(e);
    const long long budget = 200LL * n;
    for (long long t = 0; t < budget && !bad.empty(); ++t) {
        const auto tri = bad[below(rng, bad.size())];
        const std::size_t pick = below(rng, 3);
        const Vertex u = tri[pick];
        const Vertex v = tri[(pick + 1) % 3];
        const Embedding saved = e;
        if (!b.flip(u, v)) continue;
        auto now = separating_triangles(e);
        if (now.size() > bad.size()) {
            e = saved;
            continue;
        }
        bad = std::move(now);
    }
    if (!bad.empty()) return std::nullopt;
    return e;
}

}  // namespace

Embedding double_wheel(int cycle_len) {
    if (cycle_len < 4) throw Error(ErrorCode::precondition, "double wheel needs a cycle of length >= 4");
    const int k = cycle_len;
    const Vertex north = k;
    const Vertex south = k + 1;
    Embedding e;
    e.rotation.resize(k + 2);
    for (Vertex i = 0; i < k; ++i) {
        e.rotation[i] = {north, (i + 1) % k, south, (i + k - 1) % k};
        e.rotation[south].push_back(i);
    }
    e.rotation[north].push_back(0);
    for (Vertex i = k - 1; i >= 1; --i) e.rotation[north].push_back(i);
    e.outer = {0, 1, north};
    return e;
}

std::vector<Vertex> smallest_facial_triangle(const Embedding& e) {
    std::vector<Vertex> best;
    std::array<Vertex, 3> best_key{};
    for (const auto& f : trace_faces(e)) {
        if (f.size() != 3) continue;
        std::array<Vertex, 3> key{f[0], f[1], f[2]};
        std::sort(key.begin(), key.end());
        if (best.empty() || key < best_key) {
            best_key = key;
            best.assign(f.rbegin(), f.rend());
        }
    }
    if (best.empty()) throw Error(ErrorCode::precondition, "embedding has no triangular face");
    std::rotate(best.begin(), std::min_element(best.begin(), best.end()), best.end());
    return best;
}

Embedding with_outer_face(Embedding e, std::vector<Vertex> outer) {
    e.outer = std::move(outer);
    validate(e);
    return e;
}

Embedding random_4ct(int n, std::uint64_t seed, const RandomOptions& options) {
    if (n < 6) throw Error(ErrorCode::precondition, "4-connected triangulations need at least 6 vertices");
    Rng rng(seed);
    for (int t = 0; t < options.max_attempts; ++t) {
        if (auto e = attempt(n, rng, options)) {
            e->outer = smallest_facial_triangle(*e);
            validate(*e);
            return *std::move(e);
        }
    }
    throw Error(ErrorCode::internal, "no 4-connected triangulation found within the attempt budget");
}

}  // namespace co31
