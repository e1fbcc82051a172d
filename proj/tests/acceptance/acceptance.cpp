// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "co31/io.hpp"
#include "co31/rect_dual.hpp"
#include "co31/ri_drawing.hpp"
#include "support.hpp"

using namespace co31;
using namespace co31::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string first_failure;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) first_failure = what;
        ok = ok && cond;
    }
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
    std::printf("%s %d %s: %s%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(),
                o.ok ? "" : " -- ", o.ok ? "" : o.first_failure.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
}

std::string tag(const Embedding& g, std::size_t index) {
    return "graph #" + std::to_string(index) + " (n=" + std::to_string(g.size()) + ")";
}

// 220 random graphs with 6 <= n <= 60 plus double wheels on 6..20 vertices.
std::vector<Embedding> build_corpus() {
    std::vector<Embedding> out;
    for (int k = 0; k < 220; ++k) out.push_back(random_4ct(6 + (k * 13) % 55, 10'000 + static_cast<std::uint64_t>(k)));
    for (int c = 4; c <= 18; ++c) out.push_back(double_wheel(c));
    return out;
}

Outcome peel_suite(const std::vector<Embedding>& corpus) {
    Outcome o;
    const auto t0 = Clock::now();
    std::size_t disks = 0;
    for (std::size_t gi = 0; gi < corpus.size() && o.ok; ++gi) {
        TriangulatedDisk d = disk_without_top(corpus[gi]);
        while (d.size() >= 4 && o.ok) {
            ++disks;
            const std::string where = tag(corpus[gi], gi) + ", disk on " + std::to_string(d.size()) + " vertices";
            o.require(is_internally_4_connected(d), where + ": input not internally 4-connected");
            const Step s = peel(d);
            bool on_outer = !s.vertices.empty();
            for (Vertex v : s.vertices) {
                on_outer = on_outer && v != d.u1() && v != d.u2() &&
                           std::find(d.outer.begin(), d.outer.end(), v) != d.outer.end();
            }
            o.require(on_outer, where + ": removed set leaves the outer cycle or touches u1/u2");
            bool shape = true;
            if (s.kind == Step::Kind::singleton) {
                shape = s.vertices.size() == 1;
            } else {
                const auto first = std::find(d.outer.begin(), d.outer.end(), s.vertices.front());
                for (std::size_t h = 0; h < s.vertices.size() && shape; ++h) {
                    const Vertex v = s.vertices[h];
                    shape = first + static_cast<std::ptrdiff_t>(h) < d.outer.end() &&
                            first[static_cast<std::ptrdiff_t>(h)] == v && d.embedding.degree(v) == 3 &&
                            d.embedding.adjacent(v, s.apex);
                }
            }
            o.require(shape, where + ": removed set is neither a singleton nor a fan");
            const TriangulatedDisk next = remove_outer_set(d, s.vertices);
            o.require(is_internally_4_connected(next), where + ": remainder not internally 4-connected");
            d = next;
        }
    }
    const double secs = seconds_since(t0);
    o.require(disks >= 200, "only " + std::to_string(disks) + " disks");
    o.require(secs < 60.0, "took " + std::to_string(secs) + " s");
    o.detail = std::to_string(disks) + " disks from " + std::to_string(corpus.size()) + " graphs in " +
               std::to_string(secs) + " s";
    return o;
}

Outcome ordering_suite(const std::vector<Embedding>& corpus) {
    Outcome o;
    std::size_t passed = 0;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        const Embedding& g = corpus[gi];
        const VerifyOrderingOptions brute{g.size()};  // never fall back to the disk check
        const Report r = verify_ordering(g, compute_31_ordering(g), brute);
        o.require(r.ok, tag(g, gi) + ": " + r.failure);
        passed += r.ok;
    }
    const Embedding oct = octahedron();
    const CanonicalOrdering golden = compute_31_ordering(oct);
    const bool golden_ok = golden.size() == 3 && golden.cells[1].kind == Cell::Kind::fan &&
                           golden.cells[1].vertices.size() == 2 && verify_ordering(oct, golden).ok;
    o.require(golden_ok, "octahedron ordering is not base, fan of two, top");
    o.detail = std::to_string(passed) + "/" + std::to_string(corpus.size()) +
               " orderings verified by brute force; octahedron golden " + (golden_ok ? "ok" : "wrong");
    return o;
}

Outcome rect_suite(const std::vector<Embedding>& corpus) {
    Outcome o;
    std::size_t passed = 0;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        const Embedding& g = corpus[gi];
        const CanonicalOrdering ord = compute_31_ordering(g);
        const RectLayout l = build_rect_dual(g, ord);
        const Report r = verify_rect_dual(g, Edge{g.outer[0], g.outer[1]}, l);
        const bool height = l.bbox.height() == Rational(1 + static_cast<long>(ord.size()) - 1);
        o.require(r.ok, tag(g, gi) + ": " + r.failure);
        o.require(height, tag(g, gi) + ": bounding box height differs from the cell count");
        passed += r.ok && height;
    }
    o.detail = std::to_string(passed) + "/" + std::to_string(corpus.size()) + " layouts exact, height = L";
    return o;
}

Outcome ri_suite(const std::vector<Embedding>& corpus) {
    Outcome o;
    std::size_t passed = 0, steps = 0;
    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        const Embedding& g = corpus[gi];
        bool monotone = true;
        const PointDrawing p = build_ri_drawing(g, compute_31_ordering(g), [&](const RiStep& s) {
            ++steps;
            for (std::size_t t = 0; t + 1 < s.chain.size(); ++t) {
                const Point& l = s.points[s.chain[t]];
                const Point& r = s.points[s.chain[t + 1]];
                monotone = monotone && l.x < r.x && l.y > r.y;
            }
        });
        const Report r = verify_ri(g, Edge{g.outer[0], g.outer[1]}, p);
        o.require(monotone, tag(g, gi) + ": outer chain not monotone after some insertion");
        o.require(r.ok, tag(g, gi) + ": " + r.failure);
        passed += r.ok && monotone;
    }
    o.detail = std::to_string(passed) + "/" + std::to_string(corpus.size()) + " drawings exact, monotone over " +
               std::to_string(steps) + " insertions";
    return o;
}

Outcome oracle_agreement(const std::vector<Embedding>& corpus) {
    Outcome o;
    std::vector<Embedding> small;
    for (const Embedding& g : corpus)
        if (g.size() <= 12) small.push_back(g);
    small.push_back(stacked_octahedra());
    small.push_back(icosahedron());
    std::size_t graphs = 0, disks = 0;
    for (const Embedding& g : small) {
        ++graphs;
        o.require(has_separating_triangle(g) == !is_k_connected(g, 4),
                  "separating-triangle test disagrees with 4-connectivity on n=" + std::to_string(g.size()));
    }
    for (const Embedding& g : corpus) {
        if (g.size() > 16) continue;
        for (const TriangulatedDisk& d : peel_sequence(g)) {
            if (d.size() > 10 || d.size() < 4) continue;
            ++disks;
            o.require(!is_internally_4_connected(d) || is_k_connected(d.embedding, 3),
                      "internally 4-connected disk on " + std::to_string(d.size()) + " vertices is not 3-connected");
        }
    }
    o.require(graphs >= 10 && disks >= 50, "too few small instances");
    o.detail = std::to_string(graphs) + " triangulations with n <= 12, " + std::to_string(disks) + " disks with n <= 10";
    return o;
}

Outcome scale_smoke() {
    Outcome o;
    const Embedding g = double_wheel(10'000);
    const auto t0 = Clock::now();
    const CanonicalOrdering ord = compute_31_ordering(g);
    const double secs = seconds_since(t0);
    const Report spanning = check_later_neighbors(g, ord);
    const Report full = verify_ordering(g, ord);
    o.require(secs < 30.0, "ordering took " + std::to_string(secs) + " s");
    o.require(spanning.ok, "later-neighbour check: " + spanning.failure);
    o.require(full.ok, "per-step verification: " + full.failure);
    o.detail = "n=" + std::to_string(g.size()) + " ordered in " + std::to_string(secs) + " s, " +
               std::to_string(ord.size()) + " cells";
    return o;
}

std::string artifacts(const std::vector<Embedding>& corpus) {
    std::string out;
    for (const Embedding& g : corpus) {
        const CanonicalOrdering o = compute_31_ordering(g);
        out += io::dump(io::to_json(g));
        out += io::dump(io::to_json(o));
        out += io::dump(io::to_json(build_rect_dual(g, o)));
        out += io::dump(io::to_json(build_ri_drawing(g, o)));
    }
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

// Runs the command-line pipeline into `dir` and returns the concatenated files.
std::string cli_run(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto call = [](std::vector<std::string> args) {
        args.insert(args.begin(), "co31");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    };
    const std::string g = (dir / "g.json").string();
    std::string text;
    int rc = call({"gen", "--n", "48", "--seed", "31337", "-o", g});
    rc |= call({"order", g, "-o", (dir / "order.json").string()});
    rc |= call({"rd", g, "--order", (dir / "order.json").string(), "-o", (dir / "rd.json").string()});
    rc |= call({"ri", g, "--order", (dir / "order.json").string(), "-o", (dir / "ri.json").string()});
    if (rc != 0) return "cli failed";
    for (const char* f : {"g.json", "order.json", "rd.json", "ri.json"}) text += slurp(dir / f);
    return text;
}

Outcome determinism(const std::vector<Embedding>& corpus) {
    Outcome o;
    const std::string first = artifacts(corpus);
    const std::string second = artifacts(build_corpus());
    o.require(first == second, "library output differs between runs");

    const auto base = std::filesystem::temp_directory_path() / "co31_acceptance_determinism";
    std::filesystem::remove_all(base);
    const std::string run1 = cli_run(base / "run1");
    const std::string run2 = cli_run(base / "run2");
    std::filesystem::remove_all(base);
    o.require(run1 != "cli failed" && run1 == run2, "command-line output differs between runs");
    o.detail = std::to_string(first.size()) + " bytes of library output and " + std::to_string(run1.size()) +
               " bytes of command-line output identical across two runs";
    return o;
}

void guarded(int id, const std::string& name, const std::function<Outcome()>& body) {
    try {
        report(id, name, body());
    } catch (const std::exception& e) {
        Outcome o;
        o.require(false, std::string("exception: ") + e.what());
        report(id, name, o);
    }
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    const std::vector<Embedding> corpus = build_corpus();
    std::printf("corpus: %zu graphs built in %.2f s\n", corpus.size(), seconds_since(t0));

    guarded(1, "peeling step soundness", [&] { return peel_suite(corpus); });
    guarded(2, "ordering soundness", [&] { return ordering_suite(corpus); });
    guarded(3, "rectangular dual", [&] { return rect_suite(corpus); });
    guarded(4, "rectangle-of-influence drawing", [&] { return ri_suite(corpus); });
    guarded(5, "oracle agreement", [&] { return oracle_agreement(corpus); });
    guarded(6, "scale smoke test", [] { return scale_smoke(); });
    guarded(7, "determinism", [&] { return determinism(corpus); });

    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
