#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "co31/embedding.hpp"
#include "co31/ordering.hpp"
#include "co31/rational.hpp"
#include "co31/rect_dual.hpp"
#include "co31/ri_drawing.hpp"

namespace co31::io {

using Json = nlohmann::ordered_json;

/// `{"n": int, "rotation": [[...], ...], "outer": [u1, u2, u3]}`. Parsing
/// validates the embedding and throws Error(format) or
/// Error(invalid_embedding).
Json to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);

/// Disks add `"outer_cycle": [c1, ..., cl]` (clockwise, u1 first, u2 last).
Json to_json(const TriangulatedDisk& d);
TriangulatedDisk disk_from_json(const Json& j);

Json to_json(const CanonicalOrdering& o);
CanonicalOrdering ordering_from_json(const Json& j);

/// `[num, den]` in lowest terms with den > 0. Components outside the signed
/// 64-bit range are written as decimal strings.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const RectLayout& layout);
RectLayout layout_from_json(const Json& j);

Json to_json(const PointDrawing& p);
PointDrawing drawing_from_json(const Json& j);

Json read_json(std::istream& in);
Json read_json_file(const std::string& path);  // "-" reads stdin
std::string dump(const Json& j);  // compact, one line

}  // namespace co31::io
