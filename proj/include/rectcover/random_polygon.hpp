#pragma once

#include <cstdint>

#include "rectcover/geometry.hpp"

namespace rectcover {

// Union of up to six random integer rectangles in a 12x12 box. Resamples
// until the union is one connected polygon; deterministic per seed.
Polygon random_rect_union_polygon(std::uint64_t seed);

// Skyline-shaped staircase with exactly n_vertices vertices (even, >= 4):
// columns of width 1..3 whose heights random-walk within [1, 40].
Polygon random_staircase(std::size_t n_vertices, std::uint64_t seed);

}  // namespace rectcover
