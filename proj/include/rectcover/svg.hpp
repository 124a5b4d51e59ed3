#pragma once

#include <string>
#include <vector>

#include "rectcover/geometry.hpp"

namespace rectcover {

// Deterministic SVG: the polygon as one even-odd path, then the rectangles as
// semi-transparent overlays in a fixed cycling palette. Identical inputs yield
// byte-identical output.
std::string serialize_svg(const Polygon& p, const std::vector<Rect>& rects);

}  // namespace rectcover
