#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rectcover/geometry.hpp"

namespace rectcover::detail {

// Axis-aligned wall segment. Horizontal walls sit on the line y = at and span
// [lo, hi] in x; vertical walls sit on x = at and span [lo, hi] in y.
struct Wall {
  Coord at = 0;
  Coord lo = 0;
  Coord hi = 0;
};

struct WallSet {
  std::vector<Wall> hwalls;
  std::vector<Wall> vwalls;
};

WallSet polygon_boundary_walls(const Polygon& p);

// Concave vertex together with the directions in which its two incident edge
// lines continue into the interior: hdir is the sign of the horizontal
// continuation, vdir the sign of the vertical one.
struct ConcaveVertex {
  Point v;
  int hdir = 0;
  int vdir = 0;
};

std::vector<ConcaveVertex> concave_vertices(const Polygon& p);

// Stabbing index over a wall set. stop_x/stop_y shoot an axis ray from a
// point on a wall and return the coordinate where the ray first hits another
// wall. A ray whose open segment is blocked immediately at its origin is
// degenerate and yields nullopt (no cut needed there).
class WallIndex {
 public:
  explicit WallIndex(const WallSet& walls);

  std::optional<Coord> stop_x(Point origin, int dx) const;
  std::optional<Coord> stop_y(Point origin, int dy) const;

 private:
  // Key is the wall's `at`; intervals are merged, disjoint, sorted by lo.
  using IntervalMap = std::map<Coord, std::vector<std::pair<Coord, Coord>>>;

  static std::optional<Coord> stop(const IntervalMap& collinear, const IntervalMap& perpendicular,
                                   Coord along, Coord across, int dir);

  IntervalMap verticals_;    // keyed by x, spans in y
  IntervalMap horizontals_;  // keyed by y, spans in x
};

// Merge overlapping or touching walls that share a line.
std::vector<Wall> merge_walls(std::vector<Wall> walls);

// Cells of the subdivision the cut walls induce inside the boundary, sorted
// row-major. Cut walls must end on the boundary or on other cut walls; parts
// of cut walls outside the boundary are ignored.
std::vector<Rect> cells_from_walls(const WallSet& boundary, const std::vector<Wall>& cut_hwalls,
                                   const std::vector<Wall>& cut_vwalls);

}  // namespace rectcover::detail
