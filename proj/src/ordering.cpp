#include "co31/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "co31/error.hpp"

namespace co31 {

const char* to_string(Cell::Kind kind) {
    switch (kind) {
    case Cell::Kind::base: return "base";
    case Cell::Kind::singleton: return "singleton";
    case Cell::Kind::fan: return "fan";
    case Cell::Kind::top: return "top";
    }
    return "unknown";
}

namespace {

// Mutable disk used by the peeling loop. Vertices keep their ids as they are
// deleted; `labels` only drives tie-breaking.
class WorkingDisk {
public:
    WorkingDisk(std::vector<std::vector<Vertex>> rotation, std::vector<char> alive, Vertex u1,
                Vertex u2, std::vector<Vertex> labels)
        : rotation_(std::move(rotation)),
          alive_(std::move(alive)),
          labels_(std::move(labels)),
          pos_(rotation_.size(), -1),
          u1_(u1),
          u2_(u2) {
        alive_count_ = static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), 1));
        for (Vertex v = 0; v < size(); ++v) {
            if (!alive_[v]) continue;
            std::erase_if(rotation_[v], [&](Vertex w) { return !alive_[w]; });
        }
        retrace_outer();
    }

    static WorkingDisk from(const TriangulatedDisk& d) {
        return WorkingDisk(d.embedding.rotation, std::vector<char>(d.size(), 1), d.u1(), d.u2(),
                           d.labels);
    }

    int size() const { return static_cast<int>(rotation_.size()); }
    std::size_t alive_count() const { return alive_count_; }
    const std::vector<Vertex>& outer() const { return outer_; }
    int outer_pos(Vertex v) const { return pos_[v]; }
    bool on_outer(Vertex v) const { return pos_[v] >= 0; }
    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return rotation_[v]; }
    Vertex label(Vertex v) const { return labels_[v]; }

    void remove(const std::vector<Vertex>& doomed) {
        std::vector<Vertex> touched;
        for (Vertex v : doomed) {
            alive_[v] = 0;
            touched.insert(touched.end(), rotation_[v].begin(), rotation_[v].end());
        }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (Vertex w : touched) {
            if (alive_[w]) std::erase_if(rotation_[w], [&](Vertex x) { return !alive_[x]; });
        }
        for (Vertex v : doomed) rotation_[v].clear();
        alive_count_ -= doomed.size();
        retrace_outer();
    }

private:
    // Walks the face on the left of u2 -> u1, which is the outer face.
    void retrace_outer() {
        for (Vertex c : outer_) pos_[c] = -1;
        outer_.clear();
        Vertex prev = u2_;
        Vertex cur = u1_;
        while (true) {
            if (pos_[cur] >= 0 || outer_.size() >= alive_count_) {
                for (Vertex c : outer_) pos_[c] = -1;
                throw Error(ErrorCode::structural, "outer boundary is not a simple cycle");
            }
            pos_[cur] = static_cast<int>(outer_.size());
            outer_.push_back(cur);
            if (cur == u2_) break;
            const auto& rot = rotation_[cur];
            const auto it = std::find(rot.begin(), rot.end(), prev);
            if (it == rot.end()) throw Error(ErrorCode::structural, "outer walk lost adjacency");
            const std::size_t k = static_cast<std::size_t>(it - rot.begin());
            prev = cur;
            cur = rot[(k + rot.size() - 1) % rot.size()];
        }
    }

    std::vector<std::vector<Vertex>> rotation_;
    std::vector<char> alive_;
    std::vector<Vertex> labels_;
    std::vector<int> pos_;
    std::vector<Vertex> outer_;
    std::size_t alive_count_ = 0;
    Vertex u1_;
    Vertex u2_;
};

// Inner vertices with outer neighbours at two non-consecutive positions,
// with those positions in increasing order.
struct Center {
    Vertex x;
    std::vector<int> positions;
};

class LegIndex {
public:
    explicit LegIndex(const WorkingDisk& wd) : wd_(wd), is_center_(wd.size(), 0) {
        std::vector<std::vector<int>> hits(wd.size());
        std::vector<Vertex> seen;
        const auto& outer = wd.outer();
        for (int p = 0; p < static_cast<int>(outer.size()); ++p) {
            for (Vertex w : wd.neighbors(outer[p])) {
                if (wd.on_outer(w)) continue;
                if (hits[w].empty()) seen.push_back(w);
                hits[w].push_back(p);
            }
        }
        for (Vertex x : seen) {
            if (hits[x].back() - hits[x].front() >= 2) {
                is_center_[x] = 1;
                centers_.push_back({x, std::move(hits[x])});
            }
        }
        std::sort(centers_.begin(), centers_.end(),
                  [&](const Center& a, const Center& b) { return wd.label(a.x) < wd.label(b.x); });

        heavy_prefix_.assign(outer.size() + 1, 0);
        for (std::size_t p = 0; p < outer.size(); ++p) {
            heavy_prefix_[p + 1] = heavy_prefix_[p] + (wd.degree(outer[p]) != 3 ? 1 : 0);
        }
    }

    const std::vector<Center>& centers() const { return centers_; }
    bool is_center(Vertex v) const { return is_center_[v] != 0; }

    const Center& center(Vertex x) const {
        for (const auto& c : centers_) {
            if (c.x == x) return c;
        }
        throw Error(ErrorCode::precondition, "vertex " + std::to_string(wd_.label(x))
                                                 + " is not a 2-leg center");
    }

    // Every outer vertex strictly between positions i and j has degree 3.
    bool basic(int i, int j) const { return heavy_prefix_[j] - heavy_prefix_[i + 1] == 0; }

    // Flags the vertices reachable from the arc strictly inside the widest
    // 2-leg of `c` without crossing the leg. Inner vertices flagged are the
    // ones strictly inside the cycle c_i - x - c_j plus arc.
    std::vector<char> region(const Center& c) const {
        const auto& outer = wd_.outer();
        std::vector<char> mark(wd_.size(), 0);
        const int i = c.positions.front();
        const int j = c.positions.back();
        mark[c.x] = 2;
        mark[outer[i]] = 2;
        mark[outer[j]] = 2;
        std::vector<Vertex> stack;
        for (int p = i + 1; p < j; ++p) {
            mark[outer[p]] = 1;
            stack.push_back(outer[p]);
        }
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : wd_.neighbors(v)) {
                if (mark[w] == 0) {
                    mark[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (Vertex v : {c.x, outer[i], outer[j]}) mark[v] = 0;
        return mark;
    }

    bool dominates(const Center& x, Vertex y) const {
        if (!is_center(y)) {
            throw Error(ErrorCode::precondition, "vertex " + std::to_string(wd_.label(y))
                                                     + " is not a 2-leg center");
        }
        return x.x != y && region(x)[y] != 0;
    }

    // Descends from the lowest-labelled centre to the lowest-labelled centre
    // it dominates until none is left.
    const Center& minimal() const {
        if (centers_.empty()) throw Error(ErrorCode::internal, "disk has no 2-leg");
        const Center* cur = &centers_.front();
        for (std::size_t guard = 0; guard <= centers_.size(); ++guard) {
            const auto inside = region(*cur);
            const Center* next = nullptr;
            for (const auto& c : centers_) {
                if (c.x != cur->x && inside[c.x]) {
                    next = &c;
                    break;
                }
            }
            if (!next) return *cur;
            cur = next;
        }
        throw Error(ErrorCode::internal, "2-leg dominance has a cycle");
    }

private:
    const WorkingDisk& wd_;
    std::vector<char> is_center_;
    std::vector<Center> centers_;
    std::vector<int> heavy_prefix_;
};

Step peel_step(const WorkingDisk& wd) {
    if (wd.alive_count() < 4) throw Error(ErrorCode::precondition, "peeling needs at least 4 vertices");
    const LegIndex legs(wd);
    const Center& x = legs.minimal();
    const auto& outer = wd.outer();
    const auto& pos = x.positions;
    const int lo = pos.front();
    const int hi = pos.back();

    Step step;
    if (legs.basic(lo, hi)) {
        step.kind = Step::Kind::fan;
        step.apex = x.x;
        step.vertices.assign(outer.begin() + lo + 1, outer.begin() + hi);
        return step;
    }

    // Complex leg: fix the right end with the lowest label, then take the
    // largest left end that is still complex.
    int j = -1;
    for (int p : pos) {
        if (p - lo >= 2 && !legs.basic(lo, p) && (j < 0 || wd.label(outer[p]) < wd.label(outer[j]))) {
            j = p;
        }
    }
    if (j < 0) throw Error(ErrorCode::internal, "complex case without a complex 2-leg");
    int i = -1;
    for (int p : pos) {
        if (p < j - 1 && !legs.basic(p, j)) i = std::max(i, p);
    }
    step.kind = Step::Kind::singleton;
    step.vertices = {outer[i + 1]};
    return step;
}

void require_peelable(const TriangulatedDisk& d) {
    if (d.size() < 4) throw Error(ErrorCode::precondition, "disk needs at least 4 vertices");
    if (!is_internally_4_connected(d)) throw Error(ErrorCode::precondition, "disk is not internally 4-connected");
}

}  // namespace

std::vector<TwoLeg> find_two_legs(const TriangulatedDisk& d) {
    require_peelable(d);
    const auto wd = WorkingDisk::from(d);
    const LegIndex legs(wd);
    std::vector<TwoLeg> out;
    for (const auto& c : legs.centers()) {
        for (std::size_t a = 0; a < c.positions.size(); ++a) {
            for (std::size_t b = a + 1; b < c.positions.size(); ++b) {
                if (c.positions[b] - c.positions[a] >= 2) out.push_back({c.positions[a], c.x, c.positions[b]});
            }
        }
    }
    if (out.empty()) throw Error(ErrorCode::internal, "internally 4-connected disk without a 2-leg");
    std::sort(out.begin(), out.end(), [](const TwoLeg& a, const TwoLeg& b) {
        return std::tie(a.i, a.j, a.center) < std::tie(b.i, b.j, b.center);
    });
    return out;
}

bool dominates(const TriangulatedDisk& d, Vertex x, Vertex y) {
    const auto wd = WorkingDisk::from(d);
    const LegIndex legs(wd);
    return legs.dominates(legs.center(x), y);
}

Vertex minimal_center(const TriangulatedDisk& d) {
    require_peelable(d);
    const auto wd = WorkingDisk::from(d);
    return LegIndex(wd).minimal().x;
}

LegKind classify_two_leg(const TriangulatedDisk& d, const TwoLeg& leg) {
    const int len = static_cast<int>(d.outer.size());
    if (leg.i < 0 || leg.j >= len || leg.i >= leg.j - 1) {
        throw Error(ErrorCode::precondition, "2-leg needs 0 <= i < j - 1 < l - 1");
    }
    if (std::find(d.outer.begin(), d.outer.end(), leg.center) != d.outer.end()) {
        throw Error(ErrorCode::precondition, "2-leg center lies on the outer cycle");
    }
    const auto& e = d.embedding;
    if (!e.adjacent(leg.center, d.outer[leg.i]) || !e.adjacent(leg.center, d.outer[leg.j])) {
        throw Error(ErrorCode::precondition, "2-leg center is not adjacent to both ends");
    }
    for (int p = leg.i + 1; p < leg.j; ++p) {
        if (e.degree(d.outer[p]) != 3) return LegKind::complex;
    }
    return LegKind::basic;
}

Step peel(const TriangulatedDisk& d) {
    require_peelable(d);
    return peel_step(WorkingDisk::from(d));
}

CanonicalOrdering compute_31_ordering(const Embedding& g) {
    if (auto check = is_triangulation(g); !check) {
        throw Error(ErrorCode::precondition, "not a triangulation: " + check.reason);
    }
    if (g.size() < 6) {
        throw Error(ErrorCode::precondition,
                    "no triangulation on " + std::to_string(g.size()) + " vertices is 4-connected");
    }
    if (has_separating_triangle(g)) {
        throw Error(ErrorCode::precondition, "not 4-connected: has a separating triangle");
    }
    const Vertex u1 = g.outer[0];
    const Vertex u2 = g.outer[1];
    const Vertex u3 = g.outer[2];

    std::vector<char> alive(g.size(), 1);
    alive[u3] = 0;
    std::vector<Vertex> labels(g.size());
    std::iota(labels.begin(), labels.end(), 0);
    WorkingDisk wd(g.rotation, std::move(alive), u1, u2, std::move(labels));

    std::vector<Cell> reversed;
    reversed.push_back({Cell::Kind::top, {u3}, -1});
    while (wd.alive_count() >= 4) {
        Step step = peel_step(wd);
        wd.remove(step.vertices);
        reversed.push_back({step.kind == Step::Kind::fan ? Cell::Kind::fan : Cell::Kind::singleton,
                            std::move(step.vertices), step.apex});
    }
    if (wd.outer().size() != 3) throw Error(ErrorCode::internal, "peeling did not end on a triangle");
    reversed.push_back({Cell::Kind::base, {u1, u2, wd.outer()[1]}, -1});

    CanonicalOrdering o;
    o.cells.assign(reversed.rbegin(), reversed.rend());
    return o;
}

}  // namespace co31
