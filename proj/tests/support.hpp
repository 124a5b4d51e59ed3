#pragma once

#include <cstdint>
#include <vector>

#include "rectcover/cost.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/geometry.hpp"
#include "rectcover/rational.hpp"

namespace testsupport {

using namespace rectcover;

// Fixture polygons.
Polygon rect1();    // unit square
Polygon l6();       // 2x2 square missing its top-right cell
Polygon plus12();   // plus sign, five unit cells
Polygon towers();   // three towers of heights 3, 1, 2
Polygon fig3();     // L-shape whose candidate family has exactly 5 rectangles
Polygon holed6();   // 6x6 square with a centered 2x2 hole
Polygon brick();    // 15-brick compound shape, area 152

const std::vector<Rect>& brick_tiling();    // the 15 bricks (a tiling)
const std::vector<Rect>& brick_cover9();    // 9-rectangle overlapping cover, area 376
const std::vector<Rect>& brick_cover13();   // 13-rectangle cover, area 156

// Interior test by +x ray against vertical edges; the library uses a +y ray
// against horizontal edges, so agreement is meaningful. Doubled coordinates.
bool pixel_in(Point doubled, const Polygon& p);

// True iff every unit pixel of r lies inside p. Requires integer coordinates
// and a moderate bounding box.
bool pixel_rect_in(const Rect& r, const Polygon& p);

// Brute-force candidate family: all rectangles with corners on base-cell
// corner coordinates whose pixels all lie inside the polygon.
std::vector<Rect> pixel_powerset(const Polygon& p, const BaseRectGraph& g);

// Minimum number of interior-disjoint rectangles tiling p, by exhaustive
// search over grid-cell unions (at most 64 grid cells).
std::size_t min_partition_size(const Polygon& p);

// Minimum-cost cover by exhaustive branching over the candidate family with
// a single global cost-rate bound; independent of the production solver's
// ordering and per-cell bounds.
Rational brute_min_cover_cost(const BaseRectGraph& g, const CostParams& params);

// Deterministic corpus: rectangle-union polygons with at most eight base
// cells, discovered by scanning seeds from 1 upward.
std::vector<Polygon> small_corpus(std::size_t count);

}  // namespace testsupport
