#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rectcover/cover.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/rational.hpp"

namespace rectcover {

// Cost-monotone cover rewrites. Each pass leaves the cover valid and never
// increases its cost; rewrites that need a gain require it strictly.

// Drop rectangles whose every cell is covered elsewhere, in input order.
Cover prune_cover(const BaseRectGraph& g, const Cover& c);

// Shrink each rectangle to the bounding box of the cells only it covers.
Cover trim_cover(const BaseRectGraph& g, const Cover& c);

// Replace a rectangle by bounding boxes of the connected groups of cells
// only it covers, when that is strictly cheaper.
Cover bb_split_cover(const BaseRectGraph& g, const Cover& c);

// Like bb_split_cover, but covers each group with a minimum partition.
// Groups whose region cannot be expressed as a polygon stay untouched.
Cover partition_split_cover(const BaseRectGraph& g, const Cover& c);

// Merge runs of rectangles sharing a horizontal band, then a vertical one,
// when the merged box stays inside the polygon and is strictly cheaper.
Cover simple_join_cover(const BaseRectGraph& g, const Cover& c);

// Try merging every pair; quadratic but order-deterministic.
Cover full_join_cover(const BaseRectGraph& g, const Cover& c);

struct PipelineResult {
  Cover cover;
  std::vector<std::pair<std::string, Rational>> stage_costs;  // after each stage
};

// Stage names: prune, trim, bbsplit, parsplit, join, fulljoin.
PipelineResult run_pipeline(const BaseRectGraph& g, Cover c, const std::vector<std::string>& stages);

}  // namespace rectcover
