#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rectcover/cost.hpp"
#include "rectcover/geometry.hpp"

namespace rectcover {

// Cells of the subdivision induced by every vertex coordinate line.
std::vector<Rect> grid_rectangles(const Polygon& p);

// Cells of the subdivision induced by shooting both interior axis rays from
// every concave vertex. Coarser than the grid, but every grid-aligned
// rectangle inside the polygon is still a union of these cells.
std::vector<Rect> base_rectangles(const Polygon& p);

// Adjacency graph over subdivision cells. A neighbour link exists only when
// two cells share a full edge; in the subdivisions above every interior
// adjacency is of that kind. height counts bottom-neighbour steps down to a
// cell resting on the boundary.
struct BaseRectGraph {
  std::vector<Rect> cells;  // row-major: descending top, then ascending left
  std::vector<std::int32_t> left, top, right, bottom;  // -1 when the side is boundary
  std::vector<std::int32_t> height;

  struct Row {
    Coord top_y = 0;
    std::int32_t begin = 0, end = 0;
  };
  std::vector<Row> rows;  // descending top_y

  std::int32_t cell_at(Point top_left) const;

  // Visit ids of cells fully contained in r, in row-major order.
  template <typename F>
  void for_each_cell_in(const Rect& r, F&& f) const {
    auto row_it = std::lower_bound(rows.begin(), rows.end(), r.top(),
                                   [](const Row& row, Coord t) { return row.top_y > t; });
    for (; row_it != rows.end() && row_it->top_y > r.bottom(); ++row_it) {
      std::int32_t lo = row_it->begin, hi = row_it->end;
      while (lo < hi) {
        const std::int32_t mid = lo + (hi - lo) / 2;
        if (cells[static_cast<std::size_t>(mid)].left() < r.left()) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      for (std::int32_t i = lo;
           i < row_it->end && cells[static_cast<std::size_t>(i)].left() < r.right(); ++i) {
        if (r.contains(cells[static_cast<std::size_t>(i)])) f(i);
      }
    }
  }

  std::vector<std::int32_t> cells_in(const Rect& r) const;

  // Total area of contained cells; equals r.area() exactly when r is a union
  // of cells.
  std::int64_t covered_area_in(const Rect& r) const;
};

BaseRectGraph build_cell_graph(std::vector<Rect> cells);
BaseRectGraph build_graph(const Polygon& p);

// Candidate rectangles with their covered cells (CSR layout) and scaled costs.
struct CandidateSet {
  std::vector<Rect> rects;
  std::vector<std::int64_t> cover_offsets;  // size rects.size() + 1
  std::vector<std::int32_t> cover_ids;
  std::vector<std::int64_t> cost;  // scaled by scale.den
  CostScale scale;
};

inline constexpr std::int64_t kDefaultCandidateCap = 20'000'000;

// Every rectangle expressible as a union of graph cells, sorted row-major.
// Throws CapExceeded when more than cap rectangles exist.
std::vector<Rect> enumerate_powerset_rects(const BaseRectGraph& g,
                                           std::int64_t cap = kDefaultCandidateCap);

CandidateSet enumerate_powerset(const BaseRectGraph& g, const CostParams& params,
                                std::int64_t cap = kDefaultCandidateCap);

CandidateSet candidate_set_from(const BaseRectGraph& g, std::vector<Rect> rects,
                                const CostParams& params);

// r must be a union of graph cells. Maximal means no contained rectangle
// extension in any axis direction stays inside the polygon.
bool rect_is_maximal(const BaseRectGraph& g, const Rect& r);

std::vector<Rect> maximal_rectangles(const BaseRectGraph& g,
                                     std::int64_t cap = kDefaultCandidateCap);

}  // namespace rectcover
