#pragma once

#include <string>

#include "co31/embedding.hpp"
#include "co31/rect_dual.hpp"
#include "co31/ri_drawing.hpp"

namespace co31 {

std::string rect_dual_svg(const RectLayout& layout);

std::string ri_svg(const Embedding& g, Edge removed, const PointDrawing& p,
                   bool influence_boxes);

}  // namespace co31
