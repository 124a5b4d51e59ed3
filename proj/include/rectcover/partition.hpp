#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rectcover/cover.hpp"
#include "rectcover/geometry.hpp"

namespace rectcover {

// Minimum-cardinality partition into interior-disjoint rectangles: axis
// chords between cofacing concave vertices, a maximum independent set of
// pairwise compatible chords, and vertical rays from the remaining concave
// vertices. For a hole-free polygon the rectangle count is exactly
// (concave vertices) + 1 - (selected chords), the proven minimum.
Cover partition_cover(const Polygon& p, const CostParams& params);

struct PartitionDetail {
  Cover cover;
  std::size_t concave_count = 0;
  std::size_t chord_count = 0;  // candidate chords
  std::vector<std::pair<Point, Point>> selected_chords;
};

PartitionDetail partition_cover_detail(const Polygon& p, const CostParams& params);

}  // namespace rectcover
