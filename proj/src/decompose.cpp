#include "rectcover/decompose.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "cell_sweep.hpp"
#include "rectcover/errors.hpp"

namespace rectcover {

namespace {

void check_tiling(const Polygon& p, const std::vector<Rect>& cells) {
  std::int64_t sum = 0;
  for (const Rect& c : cells) sum += c.area();
  if (sum != polygon_area(p)) throw std::logic_error("subdivision does not tile the polygon");
}

}  // namespace

std::vector<Rect> grid_rectangles(const Polygon& p) {
  const detail::WallSet boundary = detail::polygon_boundary_walls(p);
  const Rect box = bounding_box(p);
  std::vector<detail::Wall> hcuts, vcuts;
  for (const detail::Wall& w : boundary.hwalls) hcuts.push_back({w.at, box.left(), box.right()});
  for (const detail::Wall& w : boundary.vwalls) vcuts.push_back({w.at, box.bottom(), box.top()});
  std::vector<Rect> cells = detail::cells_from_walls(boundary, detail::merge_walls(std::move(hcuts)),
                                                     detail::merge_walls(std::move(vcuts)));
  check_tiling(p, cells);
  return cells;
}

std::vector<Rect> base_rectangles(const Polygon& p) {
  const detail::WallSet boundary = detail::polygon_boundary_walls(p);
  const detail::WallIndex index(boundary);
  std::vector<detail::Wall> hcuts, vcuts;
  for (const detail::ConcaveVertex& cv : detail::concave_vertices(p)) {
    if (auto sx = index.stop_x(cv.v, cv.hdir)) {
      hcuts.push_back({cv.v.y, std::min(cv.v.x, *sx), std::max(cv.v.x, *sx)});
    }
    if (auto sy = index.stop_y(cv.v, cv.vdir)) {
      vcuts.push_back({cv.v.x, std::min(cv.v.y, *sy), std::max(cv.v.y, *sy)});
    }
  }
  std::vector<Rect> cells = detail::cells_from_walls(boundary, detail::merge_walls(std::move(hcuts)),
                                                     detail::merge_walls(std::move(vcuts)));
  check_tiling(p, cells);
  return cells;
}

std::int32_t BaseRectGraph::cell_at(Point top_left) const {
  auto row_it = std::lower_bound(rows.begin(), rows.end(), top_left.y,
                                 [](const Row& row, Coord t) { return row.top_y > t; });
  if (row_it == rows.end() || row_it->top_y != top_left.y) return -1;
  std::int32_t lo = row_it->begin, hi = row_it->end;
  while (lo < hi) {
    const std::int32_t mid = lo + (hi - lo) / 2;
    if (cells[static_cast<std::size_t>(mid)].left() < top_left.x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < row_it->end && cells[static_cast<std::size_t>(lo)].left() == top_left.x) return lo;
  return -1;
}

std::vector<std::int32_t> BaseRectGraph::cells_in(const Rect& r) const {
  std::vector<std::int32_t> out;
  for_each_cell_in(r, [&](std::int32_t i) { out.push_back(i); });
  return out;
}

std::int64_t BaseRectGraph::covered_area_in(const Rect& r) const {
  std::int64_t sum = 0;
  for_each_cell_in(r, [&](std::int32_t i) { sum += cells[static_cast<std::size_t>(i)].area(); });
  return sum;
}

BaseRectGraph build_cell_graph(std::vector<Rect> cells) {
  std::sort(cells.begin(), cells.end(), rect_less);
  BaseRectGraph g;
  g.cells = std::move(cells);
  const std::int32_t n = static_cast<std::int32_t>(g.cells.size());
  g.left.assign(static_cast<std::size_t>(n), -1);
  g.top.assign(static_cast<std::size_t>(n), -1);
  g.right.assign(static_cast<std::size_t>(n), -1);
  g.bottom.assign(static_cast<std::size_t>(n), -1);
  g.height.assign(static_cast<std::size_t>(n), 0);

  for (std::int32_t i = 0; i < n; ++i) {
    const Rect& c = g.cells[static_cast<std::size_t>(i)];
    if (g.rows.empty() || g.rows.back().top_y != c.top()) g.rows.push_back({c.top(), i, i});
    g.rows.back().end = i + 1;
  }

  // A full shared edge determines the neighbour's other two side coordinates,
  // so a keyed lookup resolves adjacency exactly.
  using EdgeKey = std::tuple<Coord, Coord, Coord>;
  std::map<EdgeKey, std::int32_t> by_left_edge, by_top_edge;
  for (std::int32_t i = 0; i < n; ++i) {
    const Rect& c = g.cells[static_cast<std::size_t>(i)];
    by_left_edge[{c.left(), c.bottom(), c.top()}] = i;
    by_top_edge[{c.top(), c.left(), c.right()}] = i;
  }
  for (std::int32_t i = 0; i < n; ++i) {
    const Rect& c = g.cells[static_cast<std::size_t>(i)];
    if (auto it = by_left_edge.find({c.right(), c.bottom(), c.top()}); it != by_left_edge.end()) {
      g.right[static_cast<std::size_t>(i)] = it->second;
      g.left[static_cast<std::size_t>(it->second)] = i;
    }
    if (auto it = by_top_edge.find({c.bottom(), c.left(), c.right()}); it != by_top_edge.end()) {
      g.bottom[static_cast<std::size_t>(i)] = it->second;
      g.top[static_cast<std::size_t>(it->second)] = i;
    }
  }

  std::vector<std::int32_t> by_bottom(static_cast<std::size_t>(n));
  for (std::int32_t i = 0; i < n; ++i) by_bottom[static_cast<std::size_t>(i)] = i;
  std::sort(by_bottom.begin(), by_bottom.end(), [&](std::int32_t a, std::int32_t b) {
    return g.cells[static_cast<std::size_t>(a)].bottom() < g.cells[static_cast<std::size_t>(b)].bottom();
  });
  for (std::int32_t i : by_bottom) {
    const std::int32_t below = g.bottom[static_cast<std::size_t>(i)];
    g.height[static_cast<std::size_t>(i)] = below < 0 ? 0 : g.height[static_cast<std::size_t>(below)] + 1;
  }
  return g;
}

BaseRectGraph build_graph(const Polygon& p) { return build_cell_graph(base_rectangles(p)); }

namespace {

template <typename Emit>
void walk_powerset(const BaseRectGraph& g, std::int64_t cap, Emit&& emit) {
  constexpr Coord kSentinel = std::numeric_limits<Coord>::min();
  std::int64_t count = 0;
  const std::int32_t n = static_cast<std::int32_t>(g.cells.size());
  for (std::int32_t s = 0; s < n; ++s) {
    const Rect& start = g.cells[static_cast<std::size_t>(s)];
    Coord min_y = kSentinel;
    for (std::int32_t col = s; col >= 0; col = g.right[static_cast<std::size_t>(col)]) {
      const Coord right_x = g.cells[static_cast<std::size_t>(col)].right();
      std::int32_t cur = col;
      while (true) {
        const Coord b = g.cells[static_cast<std::size_t>(cur)].bottom();
        if (b < min_y) throw std::logic_error("misaligned cell columns");
        if (++count > cap) throw CapExceeded("candidate rectangle cap exceeded");
        emit(rect_span(start.left(), right_x, b, start.top()));
        if (b == min_y) break;
        const std::int32_t below = g.bottom[static_cast<std::size_t>(cur)];
        if (below < 0) {
          min_y = b;
          break;
        }
        cur = below;
      }
    }
  }
}

}  // namespace

std::vector<Rect> enumerate_powerset_rects(const BaseRectGraph& g, std::int64_t cap) {
  std::vector<Rect> rects;
  walk_powerset(g, cap, [&](const Rect& r) { rects.push_back(r); });
  std::sort(rects.begin(), rects.end(), rect_less);
  rects.erase(std::unique(rects.begin(), rects.end()), rects.end());
  return rects;
}

CandidateSet enumerate_powerset(const BaseRectGraph& g, const CostParams& params, std::int64_t cap) {
  return candidate_set_from(g, enumerate_powerset_rects(g, cap), params);
}

CandidateSet candidate_set_from(const BaseRectGraph& g, std::vector<Rect> rects,
                                const CostParams& params) {
  CandidateSet cs;
  cs.scale = make_scale(params);
  cs.rects = std::move(rects);
  cs.cover_offsets.reserve(cs.rects.size() + 1);
  cs.cover_offsets.push_back(0);
  cs.cost.reserve(cs.rects.size());
  for (const Rect& r : cs.rects) {
    std::int64_t covered = 0;
    g.for_each_cell_in(r, [&](std::int32_t id) {
      cs.cover_ids.push_back(id);
      covered += g.cells[static_cast<std::size_t>(id)].area();
    });
    if (covered != r.area()) throw std::logic_error("candidate is not a union of cells");
    cs.cover_offsets.push_back(static_cast<std::int64_t>(cs.cover_ids.size()));
    cs.cost.push_back(scaled_rect_cost(cs.scale, r.area()));
  }
  return cs;
}

bool rect_is_maximal(const BaseRectGraph& g, const Rect& r) {
  bool ext_left = true, ext_top = true, ext_right = true, ext_bottom = true;
  g.for_each_cell_in(r, [&](std::int32_t i) {
    const Rect& c = g.cells[static_cast<std::size_t>(i)];
    const std::size_t u = static_cast<std::size_t>(i);
    if (c.left() == r.left() && g.left[u] < 0) ext_left = false;
    if (c.top() == r.top() && g.top[u] < 0) ext_top = false;
    if (c.right() == r.right() && g.right[u] < 0) ext_right = false;
    if (c.bottom() == r.bottom() && g.bottom[u] < 0) ext_bottom = false;
  });
  return !ext_left && !ext_top && !ext_right && !ext_bottom;
}

std::vector<Rect> maximal_rectangles(const BaseRectGraph& g, std::int64_t cap) {
  std::vector<Rect> out;
  walk_powerset(g, cap, [&](const Rect& r) {
    if (rect_is_maximal(g, r)) out.push_back(r);
  });
  std::sort(out.begin(), out.end(), rect_less);
  return out;
}

}  // namespace rectcover
