#include <doctest.h>

#include <sstream>

#include "co31/error.hpp"
#include "co31/io.hpp"
#include "co31/rect_dual.hpp"
#include "co31/ri_drawing.hpp"
#include "support.hpp"

using namespace co31;
using namespace co31::testing;
using io::Json;

namespace {

Json parse(const std::string& text) {
    std::istringstream in(text);
    return io::read_json(in);
}

}  // namespace

TEST_CASE("graph format") {
    const Json j = io::to_json(octahedron());
    CHECK(j.dump() ==
          R"({"n":6,"rotation":[[4,1,5,3],[4,2,5,0],[4,3,5,1],[4,0,5,2],[0,3,2,1],[0,1,2,3]],"outer":[0,1,4]})");
    CHECK(io::embedding_from_json(j) == octahedron());
}

TEST_CASE("ordering format") {
    const Json j = io::to_json(compute_31_ordering(octahedron()));
    CHECK(j.dump() ==
          R"({"cells":[{"kind":"base","vertices":[0,1,5]},{"kind":"fan","vertices":[3,2],"apex":5},{"kind":"top","vertex":4}]})");
    CHECK(io::ordering_from_json(j) == compute_31_ordering(octahedron()));
}

TEST_CASE("rationals") {
    CHECK(io::to_json(Rational(-6, 4)).dump() == "[-3,2]");
    CHECK(io::rational_from_json(parse("[4, 6]")) == Rational(2, 3));
    CHECK_THROWS_AS(io::rational_from_json(parse("5")), Error);

    const Rational big = Rational(BigInt("123456789012345678901234567891"), BigInt(2));
    const Json j = io::to_json(big);
    CHECK(j.dump() == R"(["123456789012345678901234567891",2])");
    CHECK(io::rational_from_json(j) == big);

    CHECK_THROWS_AS(io::rational_from_json(parse("[1, 0]")), Error);
    CHECK_THROWS_AS(io::rational_from_json(parse("[1, 2, 3]")), Error);
    CHECK_THROWS_AS(io::rational_from_json(parse(R"(["x", 1])")), Error);
}

TEST_CASE("malformed graphs are rejected") {
    CHECK_THROWS_AS(io::embedding_from_json(parse(R"({"rotation":[[1],[0]],"outer":[0,1]})")), Error);
    CHECK_THROWS_AS(io::embedding_from_json(parse(R"({"n":3,"rotation":[[1,2],[2],[0,1]],"outer":[0,1,2]})")),
                    Error);
    CHECK_THROWS_AS(io::embedding_from_json(parse(R"({"n":3,"rotation":[[1],[0]],"outer":[0,1]})")), Error);
    CHECK_THROWS_AS(parse("{not json"), Error);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/graph.json"), Error);

    try {
        io::embedding_from_json(parse(R"({"n":3,"rotation":[[1,2],[2],[0,1]],"outer":[0,1,2]})"));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_embedding);
    }
}

TEST_CASE("disk format") {
    const TriangulatedDisk d = disk_without_top(octahedron());
    const Json j = io::to_json(d);
    CHECK(j.contains("outer_cycle"));
    const TriangulatedDisk back = io::disk_from_json(j);
    CHECK(back.embedding == d.embedding);
    CHECK(back.outer == d.outer);
}

TEST_CASE("property: round trips") {
    for (const Embedding& g : random_corpus(15, 6, 40, 6000)) {
        const Embedding g2 = io::embedding_from_json(parse(io::dump(io::to_json(g))));
        CHECK(g2 == g);

        const CanonicalOrdering o = compute_31_ordering(g);
        CHECK(io::ordering_from_json(parse(io::dump(io::to_json(o)))) == o);

        const RectLayout l = build_rect_dual(g, o);
        CHECK(io::layout_from_json(parse(io::dump(io::to_json(l)))) == l);

        const PointDrawing p = build_ri_drawing(g, o);
        CHECK(io::drawing_from_json(parse(io::dump(io::to_json(p)))) == p);
    }
}
