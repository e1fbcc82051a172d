#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "co31/error.hpp"
#include "co31/generator.hpp"
#include "co31/io.hpp"
#include "co31/ordering.hpp"
#include "co31/rect_dual.hpp"
#include "co31/ri_drawing.hpp"
#include "co31/svg.hpp"

namespace co31::cli {

namespace {

using io::Json;

struct Failure {
    int exit_code;
    std::string kind;
    std::string message;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::precondition:
    case ErrorCode::structural: return kRejected;
    default: return kUsage;
    }
}

class Context {
public:
    Context(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    bool json_errors = false;

    int fail(const Failure& f) {
        if (json_errors) {
            Json j;
            j["error"] = f.kind;
            j["message"] = f.message;
            j["exit"] = f.exit_code;
            err_ << j.dump() << "\n";
        } else {
            err_ << "error (" << f.kind << "): " << f.message << "\n";
        }
        return f.exit_code;
    }

    int verdict(const std::string& what, const Report& r) {
        if (r.ok) {
            out_ << what << ": pass\n";
            return kOk;
        }
        return fail({kVerifyFailed, "verification_failed", what + ": " + r.failure});
    }

    void emit(const std::string& text, const std::string& path) {
        if (path.empty() || path == "-") {
            out_ << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorCode::format, "cannot write " + path);
        f << text;
    }

    std::ostream& out() { return out_; }

private:
    std::ostream& out_;
    std::ostream& err_;
};

Embedding load_graph(const std::string& path) { return io::embedding_from_json(io::read_json_file(path)); }

Edge removed_edge(const Embedding& g) { return {g.outer[0], g.outer[1]}; }

CanonicalOrdering load_or_compute(const Embedding& g, const std::string& order_path) {
    if (order_path.empty()) return compute_31_ordering(g);
    auto o = io::ordering_from_json(io::read_json_file(order_path));
    if (auto r = verify_ordering(g, o); !r) {
        throw Error(ErrorCode::precondition, "ordering does not verify: " + r.failure);
    }
    return o;
}

struct ValidateResult {
    int code = kOk;
    std::string line;
};

ValidateResult validate_one(const std::string& path) {
    try {
        const Embedding g = load_graph(path);
        if (auto t = is_triangulation(g); !t) return {kRejected, path + ": not a triangulation: " + t.reason};
        if (g.size() < 6) return {kRejected, path + ": not 4-connected (fewer than 6 vertices)"};
        if (has_separating_triangle(g)) return {kRejected, path + ": not 4-connected (separating triangle)"};
        return {kOk, path + ": ok (n=" + std::to_string(g.size()) + ", 4-connected triangulation)"};
    } catch (const Error& e) {
        return {exit_code_for(e.code()), path + ": " + e.what()};
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context ctx(out, err);
    CLI::App app{"(3,1)-canonical orderings, rectangular duals and rectangle-of-influence drawings"};
    app.require_subcommand(1);
    app.add_flag("--json-errors", ctx.json_errors, "Print errors as JSON on stderr");

    std::vector<std::string> validate_files;
    int jobs = 1;
    auto* validate = app.add_subcommand("validate", "Check that graphs are 4-connected triangulations");
    validate->add_option("graphs", validate_files, "Graph JSON files")->required();
    validate->add_option("--jobs", jobs, "Files checked concurrently")->check(CLI::PositiveNumber);

    std::string graph_path, order_path, input_path, output_path, svg_path;
    bool integer = false;
    bool influence = false;

    auto* order = app.add_subcommand("order", "Compute a (3,1)-canonical ordering");
    order->add_option("graph", graph_path)->required();
    order->add_option("-o,--output", output_path);

    auto* rd = app.add_subcommand("rd", "Rectangular dual of G minus (u1, u2)");
    rd->add_option("graph", graph_path)->required();
    rd->add_option("--order", order_path, "Use this ordering instead of computing one");
    rd->add_option("-o,--output", output_path);
    rd->add_option("--svg", svg_path);
    rd->add_flag("--integer", integer, "Rescale to integer coordinates");

    auto* ri = app.add_subcommand("ri", "Rectangle-of-influence drawing of G minus (u1, u2)");
    ri->add_option("graph", graph_path)->required();
    ri->add_option("--order", order_path, "Use this ordering instead of computing one");
    ri->add_option("-o,--output", output_path);
    ri->add_option("--svg", svg_path);
    ri->add_flag("--influence", influence, "Draw each edge's rectangle of influence in the SVG");

    auto* check_order = app.add_subcommand("check-order", "Verify an ordering");
    check_order->add_option("graph", graph_path)->required();
    check_order->add_option("ordering", input_path)->required();

    auto* check_rd = app.add_subcommand("check-rd", "Verify a rectangular dual layout");
    check_rd->add_option("graph", graph_path)->required();
    check_rd->add_option("layout", input_path)->required();

    auto* check_ri = app.add_subcommand("check-ri", "Verify a rectangle-of-influence drawing");
    check_ri->add_option("graph", graph_path)->required();
    check_ri->add_option("drawing", input_path)->required();

    std::string family = "random";
    int cycle_len = 4;
    int n = 12;
    std::uint64_t seed = 0;
    int count = 1;
    std::string out_dir;
    auto* gen = app.add_subcommand("gen", "Generate 4-connected triangulations");
    gen->add_option("--family", family)->check(CLI::IsMember({"random", "double-wheel"}));
    gen->add_option("--cycle-len", cycle_len, "Cycle length for double wheels");
    gen->add_option("--n", n, "Vertex count for random graphs");
    gen->add_option("--seed", seed, "Seed of the first random graph");
    gen->add_option("--count", count, "Number of random graphs (seeds seed, seed+1, ...)")->check(CLI::PositiveNumber);
    gen->add_option("--out-dir", out_dir, "Write one file per graph here");
    gen->add_option("-o,--output", output_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) {
            std::vector<ValidateResult> results(validate_files.size());
            const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), validate_files.size());
            std::vector<std::thread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < validate_files.size(); i += workers) {
                        results[i] = validate_one(validate_files[i]);
                    }
                });
            }
            for (auto& t : pool) t.join();
            int code = kOk;
            for (const auto& r : results) {
                if (r.code == kOk) {
                    out << r.line << "\n";
                } else {
                    ctx.fail({r.code, r.code == kRejected ? "rejected" : "input", r.line});
                }
                code = std::max(code, r.code);
            }
            return code;
        }

        if (*order) {
            const Embedding g = load_graph(graph_path);
            ctx.emit(io::dump(io::to_json(compute_31_ordering(g))), output_path);
            return kOk;
        }

        if (*rd) {
            const Embedding g = load_graph(graph_path);
            RectLayout layout = build_rect_dual(g, load_or_compute(g, order_path));
            if (integer) layout = scale_to_integers(layout);
            ctx.emit(io::dump(io::to_json(layout)), output_path);
            if (!svg_path.empty()) ctx.emit(rect_dual_svg(layout), svg_path);
            return kOk;
        }

        if (*ri) {
            const Embedding g = load_graph(graph_path);
            const PointDrawing drawing = build_ri_drawing(g, load_or_compute(g, order_path));
            ctx.emit(io::dump(io::to_json(drawing)), output_path);
            if (!svg_path.empty()) ctx.emit(ri_svg(g, removed_edge(g), drawing, influence), svg_path);
            return kOk;
        }

        if (*check_order) {
            const Embedding g = load_graph(graph_path);
            return ctx.verdict("ordering", verify_ordering(g, io::ordering_from_json(io::read_json_file(input_path))));
        }

        if (*check_rd) {
            const Embedding g = load_graph(graph_path);
            const RectLayout layout = io::layout_from_json(io::read_json_file(input_path));
            return ctx.verdict("rectangular dual", verify_rect_dual(g, removed_edge(g), layout));
        }

        if (*check_ri) {
            const Embedding g = load_graph(graph_path);
            const PointDrawing drawing = io::drawing_from_json(io::read_json_file(input_path));
            return ctx.verdict("rectangle-of-influence drawing", verify_ri(g, removed_edge(g), drawing));
        }

        if (*gen) {
            if (family == "double-wheel") {
                ctx.emit(io::dump(io::to_json(double_wheel(cycle_len))), output_path);
                return kOk;
            }
            if (count > 1 && out_dir.empty()) {
                return ctx.fail({kUsage, "usage", "--count > 1 needs --out-dir"});
            }
            for (int i = 0; i < count; ++i) {
                const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
                const std::string text = io::dump(io::to_json(random_4ct(n, s)));
                if (out_dir.empty()) {
                    ctx.emit(text, output_path);
                } else {
                    std::filesystem::create_directories(out_dir);
                    const auto path = std::filesystem::path(out_dir) / ("g_n" + std::to_string(n) + "_s" + std::to_string(s) + ".json");
                    ctx.emit(text, path.string());
                }
            }
            return kOk;
        }
    } catch (const Error& e) {
        return ctx.fail({exit_code_for(e.code()), to_string(e.code()), e.what()});
    } catch (const std::exception& e) {
        return ctx.fail({kUsage, "io", e.what()});
    }
    return kUsage;
}

}  // namespace co31::cli
