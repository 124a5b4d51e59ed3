#pragma once

#include <chrono>
#include <optional>

#include "rectcover/cover.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/geometry.hpp"

namespace rectcover {

struct GreedyOptions {
  std::int64_t max_candidates = kDefaultCandidateCap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Classic set-cover greedy over the candidate family: repeatedly pick the
// candidate with the smallest cost per unit of still-uncovered area. Ratio
// comparisons are exact; ties prefer the larger gain, then row-major order.
Cover greedy_cover(const BaseRectGraph& g, const CandidateSet& cs, const CostParams& params,
                   const GreedyOptions& opt = {});
Cover greedy_cover(const BaseRectGraph& g, const CostParams& params, const GreedyOptions& opt = {});
Cover greedy_cover(const Polygon& p, const CostParams& params, const GreedyOptions& opt = {});

}  // namespace rectcover
