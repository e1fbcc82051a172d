#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "co31/embedding.hpp"
#include "co31/error.hpp"
#include "co31/ordering.hpp"

namespace co31::detail {

// Outer chain c1..cl of G_k (u1 first, u2 last) while an ordering is replayed
// cell by cell.
class ChainTracker {
public:
    struct Insertion {
        std::size_t a = 0;            // first attachment position
        std::size_t b = 0;            // last attachment position
        std::vector<Vertex> added;    // new chain vertices, left to right
        bool fan = false;
    };

    ChainTracker(const Embedding& g, const CanonicalOrdering& o) : g_(g), pos_(g.size(), -1) {
        if (o.cells.empty() || o.cells.front().kind != Cell::Kind::base || o.cells.front().vertices.size() != 3
            || g.outer.size() != 3) {
            throw Error(ErrorCode::precondition, "ordering must start with the base triangle");
        }
        const Vertex u1 = g.outer[0];
        const Vertex u2 = g.outer[1];
        Vertex z = -1;
        for (Vertex v : o.cells.front().vertices) {
            if (v != u1 && v != u2) z = v;
        }
        if (z < 0) throw Error(ErrorCode::precondition, "base cell must contain u1 and u2");
        chain_ = {u1, z, u2};
        reindex();
    }

    const std::vector<Vertex>& chain() const { return chain_; }

    Insertion insert(const Cell& cell) {
        Insertion ins;
        int lo = -1;
        int hi = -1;
        for (Vertex z : cell.vertices) {
            if (z < 0 || z >= g_.size() || pos_[z] >= 0) {
                throw Error(ErrorCode::precondition, "cell vertex already placed or out of range");
            }
            for (Vertex w : g_.rotation[z]) {
                const int p = pos_[w];
                if (p < 0) continue;
                lo = lo < 0 ? p : std::min(lo, p);
                hi = std::max(hi, p);
            }
        }
        if (lo < 0 || hi < lo + 2) {
            throw Error(ErrorCode::internal, "cell attaches to fewer than three chain positions (b < a + 2)");
        }
        ins.a = static_cast<std::size_t>(lo);
        ins.b = static_cast<std::size_t>(hi);
        ins.added = cell.vertices;
        ins.fan = cell.kind == Cell::Kind::fan;
        if (ins.fan) {
            if (ins.b != ins.a + 2) throw Error(ErrorCode::internal, "fan does not sit on a single chain vertex");
            if (!g_.adjacent(ins.added.front(), chain_[ins.a])) std::reverse(ins.added.begin(), ins.added.end());
            if (!g_.adjacent(ins.added.front(), chain_[ins.a]) || !g_.adjacent(ins.added.back(), chain_[ins.b])) {
                throw Error(ErrorCode::internal, "fan ends do not meet the chain at a and b");
            }
        } else if (ins.added.size() != 1) {
            throw Error(ErrorCode::precondition, "non-fan cell with several vertices");
        }

        std::vector<Vertex> next(chain_.begin(), chain_.begin() + lo + 1);
        next.insert(next.end(), ins.added.begin(), ins.added.end());
        next.insert(next.end(), chain_.begin() + hi, chain_.end());
        for (int p = lo + 1; p < hi; ++p) pos_[chain_[p]] = -1;
        chain_ = std::move(next);
        reindex();
        return ins;
    }

private:
    void reindex() {
        for (std::size_t p = 0; p < chain_.size(); ++p) pos_[chain_[p]] = static_cast<int>(p);
    }

    const Embedding& g_;
    std::vector<Vertex> chain_;
    std::vector<int> pos_;
};

}  // namespace co31::detail
