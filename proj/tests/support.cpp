#include "support.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rectcover/random_polygon.hpp"
#include "rectcover/region.hpp"

namespace testsupport {

Polygon rect1() {
  return make_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

Polygon l6() {
  return make_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

Polygon plus12() {
  return make_polygon({{1, 0}, {2, 0}, {2, 1}, {3, 1}, {3, 2}, {2, 2}, {2, 3}, {1, 3}, {1, 2},
                       {0, 2}, {0, 1}, {1, 1}});
}

Polygon towers() {
  std::vector<Polygon> parts = polygons_from_rects(
      {rect_span(0, 1, 0, 3), rect_span(1, 2, 0, 1), rect_span(2, 3, 0, 2)});
  if (parts.size() != 1) throw std::logic_error("towers fixture must be connected");
  return parts.front();
}

Polygon fig3() {
  std::vector<Polygon> parts = polygons_from_rects(
      {rect_span(1, 2, 0, 2), rect_span(1, 2, 2, 3), rect_span(2, 3, 2, 3)});
  if (parts.size() != 1) throw std::logic_error("fig3 fixture must be connected");
  return parts.front();
}

Polygon holed6() {
  return make_polygon({{0, 0}, {6, 0}, {6, 6}, {0, 6}}, {{{2, 2}, {4, 2}, {4, 4}, {2, 4}}});
}

const std::vector<Rect>& brick_tiling() {
  static const std::vector<Rect> bricks = {
      rect_span(1, 3, 3, 4),    rect_span(1, 15, 4, 5),  rect_span(1, 15, 6, 10),
      rect_span(1, 3, 11, 13),  rect_span(2, 14, 5, 6),  rect_span(2, 14, 10, 11),
      rect_span(3, 13, 11, 12), rect_span(4, 12, 3, 4),  rect_span(4, 12, 12, 13),
      rect_span(5, 11, 2, 3),   rect_span(5, 11, 13, 14), rect_span(6, 10, 1, 2),
      rect_span(6, 10, 14, 15), rect_span(13, 15, 3, 4), rect_span(13, 15, 11, 13),
  };
  return bricks;
}

const std::vector<Rect>& brick_cover9() {
  static const std::vector<Rect> rects = {
      rect_span(1, 3, 3, 5),   rect_span(1, 15, 6, 10), rect_span(1, 3, 11, 13),
      rect_span(2, 14, 4, 12), rect_span(4, 12, 3, 13), rect_span(5, 11, 2, 14),
      rect_span(6, 10, 1, 15), rect_span(13, 15, 3, 5), rect_span(13, 15, 11, 13),
  };
  return rects;
}

const std::vector<Rect>& brick_cover13() {
  static const std::vector<Rect> rects = {
      rect_span(1, 3, 3, 5),    rect_span(1, 2, 6, 10),  rect_span(1, 3, 11, 13),
      rect_span(2, 4, 4, 12),   rect_span(4, 5, 3, 13),  rect_span(5, 11, 2, 14),
      rect_span(6, 10, 1, 2),   rect_span(6, 10, 14, 15), rect_span(11, 12, 3, 13),
      rect_span(12, 14, 4, 12), rect_span(13, 15, 3, 5), rect_span(13, 15, 11, 13),
      rect_span(14, 15, 6, 10),
  };
  return rects;
}

Polygon brick() {
  std::vector<Polygon> parts = polygons_from_rects(brick_tiling());
  if (parts.size() != 1) throw std::logic_error("brick fixture must be connected");
  return parts.front();
}

namespace {

void ring_crossings(const std::vector<Point>& ring, Point d, int& crossings) {
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % ring.size()];
    if (a.x != b.x) continue;  // only vertical edges cross a +x ray
    const Coord lo2 = 2 * std::min(a.y, b.y);
    const Coord hi2 = 2 * std::max(a.y, b.y);
    if (lo2 <= d.y && d.y < hi2 && 2 * a.x > d.x) ++crossings;
  }
}

}  // namespace

bool pixel_in(Point doubled, const Polygon& p) {
  int crossings = 0;
  ring_crossings(p.outer, doubled, crossings);
  for (const auto& hole : p.holes) ring_crossings(hole, doubled, crossings);
  return crossings % 2 == 1;
}

bool pixel_rect_in(const Rect& r, const Polygon& p) {
  if (r.width() > 64 || r.height() > 64) throw std::logic_error("pixel oracle box too large");
  for (Coord x = r.left(); x < r.right(); ++x) {
    for (Coord y = r.bottom(); y < r.top(); ++y) {
      if (!pixel_in({2 * x + 1, 2 * y + 1}, p)) return false;
    }
  }
  return true;
}

std::vector<Rect> pixel_powerset(const Polygon& p, const BaseRectGraph& g) {
  std::vector<Coord> xs, ys;
  for (const Rect& c : g.cells) {
    xs.push_back(c.left());
    xs.push_back(c.right());
    ys.push_back(c.bottom());
    ys.push_back(c.top());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  // A candidate is a union of base cells: it lies inside the polygon and no
  // base cell straddles its boundary (positive overlap without containment).
  const auto straddles = [&](const Rect& r) {
    for (const Rect& c : g.cells) {
      const Coord w = std::min(r.right(), c.right()) - std::max(r.left(), c.left());
      const Coord h = std::min(r.top(), c.top()) - std::max(r.bottom(), c.bottom());
      if (w > 0 && h > 0 && !r.contains(c)) return true;
    }
    return false;
  };

  std::vector<Rect> out;
  for (std::size_t xi = 0; xi + 1 < xs.size(); ++xi) {
    for (std::size_t xj = xi + 1; xj < xs.size(); ++xj) {
      for (std::size_t yi = 0; yi + 1 < ys.size(); ++yi) {
        for (std::size_t yj = yi + 1; yj < ys.size(); ++yj) {
          const Rect r = rect_span(xs[xi], xs[xj], ys[yi], ys[yj]);
          if (pixel_rect_in(r, p) && !straddles(r)) out.push_back(r);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), rect_less);
  return out;
}

namespace {

struct TileSearch {
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::size_t>> by_cell;  // candidates containing each cell
  std::vector<Coord> cell_area;
  Coord max_area = 0;
  std::uint64_t full = 0;
  std::size_t best = 0;

  void dfs(std::uint64_t covered, std::size_t used, Coord uncovered_area) {
    if (covered == full) {
      best = std::min(best, used);
      return;
    }
    const std::size_t need =
        static_cast<std::size_t>((uncovered_area + max_area - 1) / max_area);
    if (used + need >= best) return;
    const int cell = std::countr_zero(~covered & full);
    for (const std::size_t i : by_cell[static_cast<std::size_t>(cell)]) {
      if (masks[i] & covered) continue;  // tiles must stay disjoint
      Coord gained = 0;
      std::uint64_t m = masks[i];
      while (m) {
        gained += cell_area[static_cast<std::size_t>(std::countr_zero(m))];
        m &= m - 1;
      }
      dfs(covered | masks[i], used + 1, uncovered_area - gained);
    }
  }
};

}  // namespace

std::size_t min_partition_size(const Polygon& p) {
  const BaseRectGraph g = build_cell_graph(grid_rectangles(p));
  const std::size_t n = g.cells.size();
  if (n > 64) throw std::logic_error("tiling oracle limited to 64 grid cells");
  const std::vector<Rect> rects = enumerate_powerset_rects(g, 1 << 20);

  TileSearch search;
  search.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.best = n + 1;
  search.by_cell.resize(n);
  for (std::size_t c = 0; c < n; ++c) search.cell_area.push_back(g.cells[c].area());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    std::uint64_t mask = 0;
    g.for_each_cell_in(rects[i], [&](std::int32_t c) { mask |= std::uint64_t{1} << c; });
    search.masks.push_back(mask);
    search.max_area = std::max(search.max_area, rects[i].area());
  }
  // Larger tiles first so good incumbents appear early.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < rects.size(); ++i) {
      if (search.masks[i] >> c & 1) search.by_cell[c].push_back(i);
    }
    std::sort(search.by_cell[c].begin(), search.by_cell[c].end(),
              [&](std::size_t a, std::size_t b) { return rects[a].area() > rects[b].area(); });
  }
  search.dfs(0, 0, polygon_area(p));
  if (search.best > n) throw std::logic_error("tiling oracle found no tiling");
  return search.best;
}

namespace {

struct CoverSearch {
  std::vector<std::uint64_t> masks;
  std::vector<std::int64_t> cost;  // scaled
  std::vector<std::vector<std::size_t>> by_cell;
  std::uint64_t full = 0;
  long double min_rate = 0;  // cheapest cost per unit area over all candidates
  std::vector<Coord> cell_area;
  std::int64_t best = 0;
  std::uint64_t nodes = 0;

  void dfs(std::uint64_t covered, std::int64_t spent, Coord uncovered_area) {
    if (++nodes > 80'000'000) throw std::logic_error("cover oracle node budget exceeded");
    if (covered == full) {
      best = std::min(best, spent);
      return;
    }
    const long double bound = static_cast<long double>(spent) +
                              min_rate * static_cast<long double>(uncovered_area) * 0.999L;
    if (bound >= static_cast<long double>(best)) return;
    const int cell = std::countr_zero(~covered & full);
    for (const std::size_t i : by_cell[static_cast<std::size_t>(cell)]) {
      if (spent + cost[i] >= best) continue;
      Coord gained = 0;
      std::uint64_t m = masks[i] & ~covered;
      while (m) {
        gained += cell_area[static_cast<std::size_t>(std::countr_zero(m))];
        m &= m - 1;
      }
      dfs(covered | masks[i], spent + cost[i], uncovered_area - gained);
    }
  }
};

}  // namespace

Rational brute_min_cover_cost(const BaseRectGraph& g, const CostParams& params) {
  const std::size_t n = g.cells.size();
  if (n > 64) throw std::logic_error("cover oracle limited to 64 cells");
  const CandidateSet cs = enumerate_powerset(g, params, 1 << 20);

  CoverSearch search;
  search.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  search.by_cell.resize(n);
  Coord total_area = 0;
  for (std::size_t c = 0; c < n; ++c) {
    search.cell_area.push_back(g.cells[c].area());
    total_area += g.cells[c].area();
  }
  search.min_rate = 1e30L;
  std::int64_t greedy_all = 0;
  for (std::size_t i = 0; i < cs.rects.size(); ++i) {
    std::uint64_t mask = 0;
    for (std::int64_t k = cs.cover_offsets[i]; k < cs.cover_offsets[i + 1]; ++k) {
      mask |= std::uint64_t{1} << cs.cover_ids[static_cast<std::size_t>(k)];
    }
    search.masks.push_back(mask);
    search.cost.push_back(cs.cost[i]);
    search.min_rate = std::min(search.min_rate, static_cast<long double>(cs.cost[i]) /
                                                    static_cast<long double>(cs.rects[i].area()));
    greedy_all += cs.cost[i];
  }
  search.best = greedy_all + 1;  // covering everything with every candidate is always feasible
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < cs.rects.size(); ++i) {
      if (search.masks[i] >> c & 1) search.by_cell[c].push_back(i);
    }
    std::sort(search.by_cell[c].begin(), search.by_cell[c].end(), [&](std::size_t a, std::size_t b) {
      return static_cast<__int128>(search.cost[a]) * search.masks.size() +
                 static_cast<__int128>(a) <
             static_cast<__int128>(search.cost[b]) * search.masks.size() +
                 static_cast<__int128>(b);
    });
  }
  search.dfs(0, 0, total_area);
  return from_scaled(search.best, cs.scale);
}

std::vector<Polygon> small_corpus(std::size_t count) {
  std::vector<Polygon> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    if (seed > 100000) throw std::logic_error("corpus scan failed to find enough polygons");
    Polygon p = random_rect_union_polygon(seed);
    if (build_graph(p).cells.size() <= 8) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace testsupport
