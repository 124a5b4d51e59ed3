#pragma once

#include <vector>

#include "rectcover/cover.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/geometry.hpp"

namespace rectcover {

// One maximal horizontal strip per top-free base cell: extend sideways while
// the neighbours reach at least as deep, then take the full depth of the
// starting cell. Every emitted strip is a maximal rectangle, and the cover
// never uses more rectangles than there are top-free cells.
std::vector<Rect> strip_rects(const BaseRectGraph& g);

Cover strip_cover(const BaseRectGraph& g, const CostParams& params);
Cover strip_cover(const Polygon& p, const CostParams& params);

}  // namespace rectcover
