#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "rectcover/cover.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/geometry.hpp"

namespace rectcover {

inline constexpr std::int64_t kDefaultExactCap = 5000;

struct ExactOptions {
  std::int64_t max_candidates = kDefaultExactCap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Minimum-cost cover by branch and bound over the candidate powerset, with
// the partition cover as initial incumbent and a fractional bound: per
// uncovered cell, its area times the cheapest per-area available candidate
// covering it. solve_exact works on base cells; solve_exact_grid on the
// full-grid cells (same optimum; used as a cross-check).
Cover solve_exact(const Polygon& p, const CostParams& params, const ExactOptions& opt = {});
Cover solve_exact_grid(const Polygon& p, const CostParams& params, const ExactOptions& opt = {});

enum class LpVariant { weighted, unweighted };

// Binary covering program in CPLEX LP text format: variables
// x_{x1}_{y1}_{x2}_{y2} (top-left, bottom-right; '-' rendered as 'm'), one
// >= 1 row per base cell. The weighted variant ranges over the powerset with
// cost coefficients; the unweighted variant over maximal rectangles with
// unit coefficients.
void emit_lp(std::ostream& os, const Polygon& p, const CostParams& params, LpVariant variant,
             std::int64_t cap = kDefaultCandidateCap);

}  // namespace rectcover
