#pragma once

#include "rectcover/geometry.hpp"
#include "rectcover/rational.hpp"

namespace rectcover {

struct CostParams {
  Rational alpha;  // creation cost per rectangle
  Rational beta;   // cost per unit area
};

// Requires alpha >= 0, beta >= 0, not both zero. Throws ValidationError.
CostParams make_cost_params(Rational alpha, Rational beta);

// Common-denominator scaling: every cost under the active params is an int64
// multiple of 1/den, so comparisons and sums stay exact.
struct CostScale {
  std::int64_t alpha_num = 0;
  std::int64_t beta_num = 0;
  std::int64_t den = 1;
};

CostScale make_scale(const CostParams& params);

inline std::int64_t scaled_rect_cost(const CostScale& s, Coord area) {
  return s.alpha_num + s.beta_num * area;
}

Rational from_scaled(std::int64_t scaled, const CostScale& s);
Rational rect_cost(const Rect& r, const CostParams& params);
Rational cover_cost(std::size_t count, Coord total_area, const CostParams& params);

}  // namespace rectcover
