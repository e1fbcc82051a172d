#include <algorithm>
#include <numeric>
#include <string>

#include "co31/disk.hpp"
#include "co31/error.hpp"
#include "co31/ordering.hpp"

namespace co31 {

namespace {

std::string cell_name(std::size_t k) { return "V" + std::to_string(k + 1); }

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[a] = b;
        return true;
    }

private:
    std::vector<int> parent_;
};

// Fan test in G_k: members induce a path in listed order, each has degree 3
// in G_k and is adjacent to an apex placed in an earlier cell.
Report check_fan(const Embedding& g, const std::vector<int>& cell_of, std::size_t k, const Cell& cell) {
    const auto& zs = cell.vertices;
    const auto in_prefix = [&](Vertex w) { return cell_of[w] <= static_cast<int>(k); };
    if (cell.apex < 0 || cell.apex >= g.size() || cell_of[cell.apex] >= static_cast<int>(k)) {
        return Report::fail(cell_name(k) + ": fan apex must belong to an earlier cell");
    }
    std::size_t inner_edges = 0;
    for (std::size_t t = 0; t < zs.size(); ++t) {
        const Vertex z = zs[t];
        const auto& rot = g.rotation[z];
        const auto deg = std::count_if(rot.begin(), rot.end(), in_prefix);
        if (deg != 3) {
            return Report::fail(cell_name(k) + ": fan vertex " + std::to_string(z) + " has degree "
                                + std::to_string(deg) + " in G_k");
        }
        if (!g.adjacent(z, cell.apex)) {
            return Report::fail(cell_name(k) + ": fan vertex " + std::to_string(z)
                                + " is not adjacent to the apex");
        }
        if (t + 1 < zs.size() && !g.adjacent(z, zs[t + 1])) {
            return Report::fail(cell_name(k) + ": fan vertices are not a path in listed order");
        }
        inner_edges += static_cast<std::size_t>(std::count_if(
            rot.begin(), rot.end(), [&](Vertex w) { return cell_of[w] == static_cast<int>(k); }));
    }
    if (inner_edges / 2 + 1 != zs.size()) {
        return Report::fail(cell_name(k) + ": fan vertices do not induce a path");
    }
    return Report::pass();
}

}  // namespace

Report check_later_neighbors(const Embedding& g, const CanonicalOrdering& o) {
    std::vector<int> cell_of(g.size(), -1);
    for (std::size_t k = 0; k < o.cells.size(); ++k) {
        for (Vertex v : o.cells[k].vertices) {
            if (v >= 0 && v < g.size()) cell_of[v] = static_cast<int>(k);
        }
    }
    const Vertex u3 = g.outer.size() == 3 ? g.outer[2] : -1;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (v == u3) continue;
        const auto& rot = g.rotation[v];
        const bool later = std::any_of(rot.begin(), rot.end(),
                                       [&](Vertex w) { return cell_of[w] > cell_of[v]; });
        if (!later) return Report::fail("vertex " + std::to_string(v) + " has no neighbour in a later cell");
    }
    return Report::pass();
}

Report verify_ordering(const Embedding& g, const CanonicalOrdering& o, const VerifyOrderingOptions& options) {
    try {
        validate(g);
    } catch (const Error& err) {
        return Report::fail(std::string("invalid graph: ") + err.what());
    }
    if (g.outer.size() != 3) return Report::fail("outer face is not a triangle");
    const int n = g.size();
    const std::size_t cells = o.cells.size();
    if (cells < 2) return Report::fail("ordering needs at least two cells");

    std::vector<int> cell_of(n, -1);
    for (std::size_t k = 0; k < cells; ++k) {
        if (o.cells[k].vertices.empty()) return Report::fail(cell_name(k) + " is empty");
        for (Vertex v : o.cells[k].vertices) {
            if (v < 0 || v >= n) return Report::fail(cell_name(k) + " names a vertex out of range");
            if (cell_of[v] >= 0) return Report::fail("vertex " + std::to_string(v) + " appears twice");
            cell_of[v] = static_cast<int>(k);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (cell_of[v] < 0) return Report::fail("vertex " + std::to_string(v) + " is in no cell");
    }

    const Vertex u1 = g.outer[0];
    const Vertex u2 = g.outer[1];
    const Vertex u3 = g.outer[2];
    const Vertex z = left_face_apex(g, u1, u2);
    {
        const Cell& first = o.cells.front();
        std::vector<Vertex> got = first.vertices;
        std::vector<Vertex> want{u1, u2, z};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (first.kind != Cell::Kind::base || got != want) {
            return Report::fail("V1 must be the base {u1, u2, z} with z = " + std::to_string(z));
        }
    }
    {
        const Cell& last = o.cells.back();
        if (last.kind != Cell::Kind::top || last.vertices != std::vector<Vertex>{u3}) {
            return Report::fail("V_L must be {u3} = {" + std::to_string(u3) + "}");
        }
    }

    for (std::size_t k = 1; k + 1 < cells; ++k) {
        const Cell& cell = o.cells[k];
        switch (cell.kind) {
        case Cell::Kind::singleton:
            if (cell.vertices.size() != 1) return Report::fail(cell_name(k) + ": singleton with several vertices");
            break;
        case Cell::Kind::fan:
            if (auto r = check_fan(g, cell_of, k, cell); !r) return r;
            break;
        default:
            return Report::fail(cell_name(k) + ": only singletons and fans may sit between V1 and V_L");
        }
    }

    const bool brute = n <= options.brute_force_limit;
    std::vector<char> prefix(n, 0);
    std::vector<Vertex> prefix_list;
    for (Vertex v : o.cells[0].vertices) {
        prefix[v] = 1;
        prefix_list.push_back(v);
    }
    for (std::size_t k = 1; k + 1 < cells; ++k) {
        for (Vertex v : o.cells[k].vertices) {
            prefix[v] = 1;
            prefix_list.push_back(v);
        }
        if (brute) {
            if (!is_k_connected(g, prefix, 3)) return Report::fail("G" + std::to_string(k + 1) + " is not 3-connected");
            std::vector<char> suffix(n);
            for (Vertex v = 0; v < n; ++v) suffix[v] = cell_of[v] >= static_cast<int>(k);
            if (!is_k_connected(g, suffix, 1)) {
                return Report::fail("complement of G" + std::to_string(k + 1) + " is disconnected");
            }
        } else {
            try {
                if (!is_internally_4_connected(induced_disk(g, prefix_list))) {
                    return Report::fail("G" + std::to_string(k + 1) + " is not an internally 4-connected disk");
                }
            } catch (const Error& err) {
                return Report::fail("G" + std::to_string(k + 1) + " is not a disk: " + err.what());
            }
        }
    }

    if (!brute) {
        // Add cells back to front and watch the number of components.
        DisjointSets sets(n);
        int components = 0;
        for (std::size_t k = cells; k-- > 1;) {
            for (Vertex v : o.cells[k].vertices) {
                ++components;
                for (Vertex w : g.rotation[v]) {
                    if (cell_of[w] >= static_cast<int>(k) && sets.unite(v, w)) --components;
                }
            }
            if (k + 1 < cells && components != 1) {
                return Report::fail("complement of G" + std::to_string(k + 1) + " is disconnected");
            }
        }
    }

    return check_later_neighbors(g, o);
}

}  // namespace co31
