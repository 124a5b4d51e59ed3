#include "rectcover/cover.hpp"

#include <limits>

#include "rectcover/errors.hpp"

namespace rectcover {

Cover make_cover(std::vector<Rect> rects, const CostParams& params) {
  Cover c;
  c.rects = std::move(rects);
  c.params = params;
  __int128 area = 0;
  for (const Rect& r : c.rects) area += r.area();
  if (area > std::numeric_limits<std::int64_t>::max()) throw ValidationError("total area overflow");
  c.total_area = static_cast<std::int64_t>(area);
  c.total_cost = cover_cost(static_cast<std::int64_t>(c.rects.size()), c.total_area, params);
  return c;
}

void validate_cover(const BaseRectGraph& g, const Polygon& p, const Cover& c) {
  std::vector<std::int32_t> counts(g.cells.size(), 0);
  for (const Rect& r : c.rects) {
    if (!rect_in_polygon(r, p)) throw ValidationError("cover rectangle outside polygon");
    std::int64_t covered = 0;
    g.for_each_cell_in(r, [&](std::int32_t i) {
      covered += g.cells[static_cast<std::size_t>(i)].area();
      ++counts[static_cast<std::size_t>(i)];
    });
    if (covered != r.area()) throw ValidationError("cover rectangle is not a union of base cells");
  }
  for (std::int32_t n : counts) {
    if (n == 0) throw ValidationError("cover leaves a base cell uncovered");
  }
}

void validate_cover(const Polygon& p, const Cover& c) { validate_cover(build_graph(p), p, c); }

}  // namespace rectcover
