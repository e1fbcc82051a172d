#include "co31/io.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "co31/error.hpp"

namespace co31::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::format, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        bad(std::string(what) + " out of range");
    }
    return static_cast<int>(v);
}

std::vector<Vertex> as_vertices(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<Vertex> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max()) {
        return Json(v.convert_to<long long>());
    }
    return Json(v.str());
}

BigInt big_from(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        const std::size_t digits = s.size() - (!s.empty() && s[0] == '-' ? 1 : 0);
        if (digits == 0 || s.find_first_not_of("0123456789", s.size() - digits) != std::string::npos) {
            bad("malformed integer string \"" + s + "\"");
        }
        return BigInt(s);
    }
    bad("rational component must be an integer or a decimal string");
}

// Vertex keys are written as decimal strings.
Vertex key_vertex(const std::string& key, int n) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        bad("vertex key \"" + key + "\" is not an integer");
    }
    if (used != key.size() || v < 0 || v >= n) bad("vertex key \"" + key + "\" out of range");
    return v;
}

}  // namespace

Json to_json(const Embedding& e) {
    Json j;
    j["n"] = e.size();
    j["rotation"] = e.rotation;
    j["outer"] = e.outer;
    return j;
}

Embedding embedding_from_json(const Json& j) {
    Embedding e;
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) bad("n must be non-negative");
    const Json& rot = field(j, "rotation");
    if (!rot.is_array() || static_cast<int>(rot.size()) != n) bad("rotation must list exactly n vertices");
    for (const auto& r : rot) e.rotation.push_back(as_vertices(r, "rotation entry"));
    e.outer = as_vertices(field(j, "outer"), "outer");
    validate(e);
    return e;
}

Json to_json(const TriangulatedDisk& d) {
    Json j = to_json(d.embedding);
    j["outer_cycle"] = d.outer;
    return j;
}

TriangulatedDisk disk_from_json(const Json& j) {
    Embedding e = embedding_from_json(j);
    if (j.contains("outer_cycle")) {
        const auto cycle = as_vertices(j.at("outer_cycle"), "outer_cycle");
        if (cycle.empty() || !same_cycle(std::vector<Vertex>(e.outer.rbegin(), e.outer.rend()), cycle)) {
            bad("outer_cycle must be the outer face in clockwise order");
        }
        std::vector<Vertex> ccw{cycle.front()};
        ccw.insert(ccw.end(), cycle.rbegin(), cycle.rend() - 1);
        e.outer = std::move(ccw);
    }
    return make_disk(std::move(e));
}

Json to_json(const CanonicalOrdering& o) {
    Json cells = Json::array();
    for (const auto& c : o.cells) {
        Json cell;
        cell["kind"] = to_string(c.kind);
        switch (c.kind) {
        case Cell::Kind::base:
            cell["vertices"] = c.vertices;
            break;
        case Cell::Kind::fan:
            cell["vertices"] = c.vertices;
            cell["apex"] = c.apex;
            break;
        case Cell::Kind::singleton:
        case Cell::Kind::top:
            cell["vertex"] = c.vertices.empty() ? -1 : c.vertices.front();
            break;
        }
        cells.push_back(std::move(cell));
    }
    Json j;
    j["cells"] = std::move(cells);
    return j;
}

CanonicalOrdering ordering_from_json(const Json& j) {
    const Json& cells = field(j, "cells");
    if (!cells.is_array()) bad("cells must be an array");
    CanonicalOrdering o;
    for (const auto& c : cells) {
        const Json& kind = field(c, "kind");
        if (!kind.is_string()) bad("cell kind must be a string");
        const auto& name = kind.get_ref<const std::string&>();
        Cell cell;
        if (name == "base") {
            cell.kind = Cell::Kind::base;
            cell.vertices = as_vertices(field(c, "vertices"), "base vertices");
            if (cell.vertices.size() != 3) bad("base cell must have three vertices");
        } else if (name == "fan") {
            cell.kind = Cell::Kind::fan;
            cell.vertices = as_vertices(field(c, "vertices"), "fan vertices");
            cell.apex = as_int(field(c, "apex"), "apex");
            if (cell.vertices.empty()) bad("fan must have at least one vertex");
        } else if (name == "singleton" || name == "top") {
            cell.kind = name == "top" ? Cell::Kind::top : Cell::Kind::singleton;
            cell.vertices = {as_int(field(c, "vertex"), "vertex")};
        } else {
            bad("unknown cell kind \"" + name + "\"");
        }
        o.cells.push_back(std::move(cell));
    }
    return o;
}

Json to_json(const Rational& r) { return Json::array({big(num(r)), big(den(r))}); }

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("rational must be a [numerator, denominator] pair");
    const BigInt n = big_from(j[0]);
    const BigInt d = big_from(j[1]);
    if (d <= 0) bad("rational denominator must be positive");
    return Rational(n, d);
}

namespace {

Json rect_json(const Rect& r) {
    return Json::array({to_json(r.x_lo), to_json(r.y_lo), to_json(r.x_hi), to_json(r.y_hi)});
}

Rect rect_from(const Json& j) {
    if (!j.is_array() || j.size() != 4) bad("rectangle must be [x0, y0, x1, y1]");
    return Rect{rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
                rational_from_json(j[3])};
}

}  // namespace

Json to_json(const RectLayout& layout) {
    Json j;
    j["bbox"] = rect_json(layout.bbox);
    Json rects = Json::object();
    for (std::size_t v = 0; v < layout.rects.size(); ++v) rects[std::to_string(v)] = rect_json(layout.rects[v]);
    j["rects"] = std::move(rects);
    return j;
}

RectLayout layout_from_json(const Json& j) {
    RectLayout layout;
    layout.bbox = rect_from(field(j, "bbox"));
    const Json& rects = field(j, "rects");
    if (!rects.is_object()) bad("rects must be an object keyed by vertex");
    const int n = static_cast<int>(rects.size());
    layout.rects.resize(n);
    std::vector<char> seen(n, 0);
    for (const auto& [key, value] : rects.items()) {
        const Vertex v = key_vertex(key, n);
        if (seen[v]) bad("duplicate vertex key " + key);
        seen[v] = 1;
        layout.rects[v] = rect_from(value);
    }
    return layout;
}

Json to_json(const PointDrawing& p) {
    Json points = Json::object();
    for (std::size_t v = 0; v < p.points.size(); ++v) {
        points[std::to_string(v)] = Json::array({to_json(p.points[v].x), to_json(p.points[v].y)});
    }
    Json j;
    j["points"] = std::move(points);
    return j;
}

PointDrawing drawing_from_json(const Json& j) {
    const Json& points = field(j, "points");
    if (!points.is_object()) bad("points must be an object keyed by vertex");
    const int n = static_cast<int>(points.size());
    PointDrawing p;
    p.points.resize(n);
    std::vector<char> seen(n, 0);
    for (const auto& [key, value] : points.items()) {
        const Vertex v = key_vertex(key, n);
        if (seen[v]) bad("duplicate vertex key " + key);
        seen[v] = 1;
        if (!value.is_array() || value.size() != 2) bad("point must be [x, y]");
        p.points[v] = Point{rational_from_json(value[0]), rational_from_json(value[1])};
    }
    return p;
}

Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& err) {
        bad(std::string("malformed JSON: ") + err.what());
    }
}

Json read_json_file(const std::string& path) {
    if (path == "-") return read_json(std::cin);
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    return read_json(in);
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace co31::io

namespace co31 {

std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace co31
