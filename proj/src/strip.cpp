#include "rectcover/strip.hpp"

#include <set>

namespace rectcover {

std::vector<Rect> strip_rects(const BaseRectGraph& g) {
  std::vector<Rect> out;
  std::set<Rect, decltype(&rect_less)> seen(&rect_less);
  const std::int32_t n = static_cast<std::int32_t>(g.cells.size());
  for (std::int32_t b = 0; b < n; ++b) {
    if (g.top[static_cast<std::size_t>(b)] >= 0) continue;
    const std::int32_t h = g.height[static_cast<std::size_t>(b)];

    std::int32_t lcell = b;
    while (g.left[static_cast<std::size_t>(lcell)] >= 0 &&
           g.height[static_cast<std::size_t>(g.left[static_cast<std::size_t>(lcell)])] >= h) {
      lcell = g.left[static_cast<std::size_t>(lcell)];
    }
    std::int32_t rcell = b;
    while (g.right[static_cast<std::size_t>(rcell)] >= 0 &&
           g.height[static_cast<std::size_t>(g.right[static_cast<std::size_t>(rcell)])] >= h) {
      rcell = g.right[static_cast<std::size_t>(rcell)];
    }
    // Adjacent columns at least this tall share the same cell boundaries on
    // the way down, so the start column's full depth is the strip's depth.
    std::int32_t floor_cell = b;
    for (std::int32_t step = 0; step < h; ++step) {
      floor_cell = g.bottom[static_cast<std::size_t>(floor_cell)];
    }

    const Rect r = rect_span(g.cells[static_cast<std::size_t>(lcell)].left(),
                             g.cells[static_cast<std::size_t>(rcell)].right(),
                             g.cells[static_cast<std::size_t>(floor_cell)].bottom(),
                             g.cells[static_cast<std::size_t>(b)].top());
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

Cover strip_cover(const BaseRectGraph& g, const CostParams& params) {
  return make_cover(strip_rects(g), params);
}

Cover strip_cover(const Polygon& p, const CostParams& params) {
  return strip_cover(build_graph(p), params);
}

}  // namespace rectcover
