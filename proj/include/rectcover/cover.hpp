#pragma once

#include <cstdint>
#include <vector>

#include "rectcover/cost.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/geometry.hpp"
#include "rectcover/rational.hpp"

namespace rectcover {

struct Cover {
  std::vector<Rect> rects;
  CostParams params;
  Rational total_cost;            // alpha * |rects| + beta * total_area
  std::int64_t total_area = 0;    // overlapping regions counted once per rect
};

Cover make_cover(std::vector<Rect> rects, const CostParams& params);

// Checks that every rectangle is a union of graph cells lying inside the
// polygon and that together they cover every cell. All algorithms in this
// library produce cell-union rectangles, which makes cell counting an exact
// coverage test. Throws ValidationError on any violation.
void validate_cover(const BaseRectGraph& g, const Polygon& p, const Cover& c);
void validate_cover(const Polygon& p, const Cover& c);

}  // namespace rectcover
