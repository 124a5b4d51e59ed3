#pragma once

#include <vector>

#include "rectcover/geometry.hpp"

namespace rectcover {

// The union of the rectangles as canonical polygons with holes. Regions that
// meet only at a vertex come back as separate polygons. A region whose hole
// touches its own outer boundary at a vertex is not representable under the
// polygon invariants and raises ValidationError.
std::vector<Polygon> polygons_from_rects(const std::vector<Rect>& rects);

}  // namespace rectcover
