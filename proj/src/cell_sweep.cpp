#include "cell_sweep.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace rectcover::detail {

namespace {

int sign(Coord v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

void ring_walls(const std::vector<Point>& ring, WallSet& out) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = ring[i];
    const Point b = ring[(i + 1) % n];
    if (a.y == b.y) {
      out.hwalls.push_back({a.y, std::min(a.x, b.x), std::max(a.x, b.x)});
    } else {
      out.vwalls.push_back({a.x, std::min(a.y, b.y), std::max(a.y, b.y)});
    }
  }
}

void ring_concave(const std::vector<Point>& ring, std::vector<ConcaveVertex>& out) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = ring[(i + n - 1) % n];
    const Point v = ring[i];
    const Point next = ring[(i + 1) % n];
    const Coord ux = sign(v.x - prev.x), uy = sign(v.y - prev.y);
    const Coord wx = sign(next.x - v.x), wy = sign(next.y - v.y);
    // Interior lies to the left on every ring, so a right turn is concave.
    if (ux * wy - uy * wx >= 0) continue;
    ConcaveVertex cv;
    cv.v = v;
    if (uy == 0) {
      // Horizontal edge arrives: its line continues straight through v, and
      // the vertical edge's line continues backwards through v.
      cv.hdir = static_cast<int>(ux);
      cv.vdir = static_cast<int>(-wy);
    } else {
      cv.vdir = static_cast<int>(uy);
      cv.hdir = static_cast<int>(-wx);
    }
    out.push_back(cv);
  }
}

std::vector<std::pair<Coord, Coord>> merge_intervals(std::vector<std::pair<Coord, Coord>> iv) {
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<Coord, Coord>> out;
  for (const auto& [lo, hi] : iv) {
    if (!out.empty() && lo <= out.back().second) {
      out.back().second = std::max(out.back().second, hi);
    } else {
      out.push_back({lo, hi});
    }
  }
  return out;
}

// True if some interval openly overlaps (lo, hi). Intervals are merged and
// sorted, so only the last one starting before hi can overlap.
bool any_open_overlap(const std::vector<std::pair<Coord, Coord>>& iv, Coord lo, Coord hi) {
  auto it = std::lower_bound(iv.begin(), iv.end(), std::pair<Coord, Coord>{hi, hi});
  if (it == iv.begin()) return false;
  --it;
  return it->second > lo;
}

}  // namespace

WallSet polygon_boundary_walls(const Polygon& p) {
  WallSet out;
  ring_walls(p.outer, out);
  for (const auto& hole : p.holes) ring_walls(hole, out);
  return out;
}

std::vector<ConcaveVertex> concave_vertices(const Polygon& p) {
  std::vector<ConcaveVertex> out;
  ring_concave(p.outer, out);
  for (const auto& hole : p.holes) ring_concave(hole, out);
  return out;
}

WallIndex::WallIndex(const WallSet& walls) {
  for (const Wall& w : walls.vwalls) verticals_[w.at].push_back({w.lo, w.hi});
  for (const Wall& w : walls.hwalls) horizontals_[w.at].push_back({w.lo, w.hi});
  for (auto& [at, iv] : verticals_) iv = merge_intervals(std::move(iv));
  for (auto& [at, iv] : horizontals_) iv = merge_intervals(std::move(iv));
}

std::optional<Coord> WallIndex::stop(const IntervalMap& collinear, const IntervalMap& perpendicular,
                                     Coord along, Coord across, int dir) {
  // A perpendicular wall crossing the origin blocks the ray outright.
  if (auto it = perpendicular.find(along); it != perpendicular.end()) {
    auto jt = std::lower_bound(it->second.begin(), it->second.end(),
                               std::pair<Coord, Coord>{across, across});
    if (jt != it->second.begin() && std::prev(jt)->second > across) return std::nullopt;
  }

  std::optional<Coord> best;
  auto consider = [&](Coord c) {
    if (!best || (dir > 0 ? c < *best : c > *best)) best = c;
  };

  // Collinear walls: the ray may not run along a wall, so the first one
  // extending into the open ray region stops it at its near end. One that
  // covers the origin's open side outright degenerates the ray.
  constexpr Coord kHiSentinel = std::numeric_limits<Coord>::max();
  if (auto it = collinear.find(across); it != collinear.end()) {
    const auto& iv = it->second;
    if (dir > 0) {
      auto jt = std::upper_bound(iv.begin(), iv.end(), std::pair<Coord, Coord>{along, kHiSentinel});
      if (jt != iv.begin() && std::prev(jt)->second > along) return std::nullopt;
      if (jt != iv.end()) consider(jt->first);
    } else {
      auto jt = std::lower_bound(iv.begin(), iv.end(), std::pair<Coord, Coord>{along, along});
      if (jt != iv.begin()) {
        --jt;
        if (jt->second >= along) return std::nullopt;
        consider(jt->second);
      }
    }
  }

  // Perpendicular walls strictly beyond the origin whose closed span covers
  // the ray line; the nearest one stops the ray.
  auto spans_across = [&](const std::vector<std::pair<Coord, Coord>>& iv) {
    auto jt = std::upper_bound(iv.begin(), iv.end(), std::pair<Coord, Coord>{across, kHiSentinel});
    return jt != iv.begin() && std::prev(jt)->second >= across;
  };
  if (dir > 0) {
    for (auto it = perpendicular.upper_bound(along); it != perpendicular.end(); ++it) {
      if (best && it->first >= *best) break;
      if (spans_across(it->second)) {
        consider(it->first);
        break;
      }
    }
  } else {
    for (auto it = std::make_reverse_iterator(perpendicular.lower_bound(along));
         it != perpendicular.rend(); ++it) {
      if (best && it->first <= *best) break;
      if (spans_across(it->second)) {
        consider(it->first);
        break;
      }
    }
  }

  if (!best) throw std::logic_error("axis ray escaped the boundary");
  return best;
}

std::optional<Coord> WallIndex::stop_x(Point origin, int dx) const {
  return stop(horizontals_, verticals_, origin.x, origin.y, dx);
}

std::optional<Coord> WallIndex::stop_y(Point origin, int dy) const {
  return stop(verticals_, horizontals_, origin.y, origin.x, dy);
}

std::vector<Wall> merge_walls(std::vector<Wall> walls) {
  std::sort(walls.begin(), walls.end(),
            [](const Wall& a, const Wall& b) { return std::tie(a.at, a.lo, a.hi) < std::tie(b.at, b.lo, b.hi); });
  std::vector<Wall> out;
  for (const Wall& w : walls) {
    if (!out.empty() && out.back().at == w.at && w.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, w.hi);
    } else {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Rect> cells_from_walls(const WallSet& boundary, const std::vector<Wall>& cut_hwalls,
                                   const std::vector<Wall>& cut_vwalls) {
  struct HWall {
    Coord y, lo, hi;
    bool bnd;
  };
  std::vector<HWall> hw;
  hw.reserve(boundary.hwalls.size() + cut_hwalls.size());
  for (const Wall& w : boundary.hwalls) hw.push_back({w.at, w.lo, w.hi, true});
  for (const Wall& w : cut_hwalls) hw.push_back({w.at, w.lo, w.hi, false});

  std::vector<Wall> vw = boundary.vwalls;
  vw.insert(vw.end(), cut_vwalls.begin(), cut_vwalls.end());
  std::sort(vw.begin(), vw.end(), [](const Wall& a, const Wall& b) { return a.at < b.at; });

  std::vector<Coord> xs;
  xs.reserve(vw.size() + 2 * hw.size());
  for (const Wall& w : vw) xs.push_back(w.at);
  for (const HWall& w : hw) {
    xs.push_back(w.lo);
    xs.push_back(w.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.empty()) return {};

  std::vector<std::size_t> by_lo(hw.size()), by_hi(hw.size());
  std::iota(by_lo.begin(), by_lo.end(), std::size_t{0});
  by_hi = by_lo;
  std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) { return hw[a].lo < hw[b].lo; });
  std::sort(by_hi.begin(), by_hi.end(), [&](std::size_t a, std::size_t b) { return hw[a].hi < hw[b].hi; });

  struct Counts {
    int bnd = 0;
    int cut = 0;
  };
  std::map<Coord, Counts> active;
  struct OpenCell {
    Coord lo, hi, start_x;
  };
  std::vector<OpenCell> open;
  std::vector<Rect> cells;

  std::size_t ilo = 0, ihi = 0, ivw = 0;
  for (Coord x : xs) {
    std::vector<std::pair<Coord, Coord>> vint;
    while (ivw < vw.size() && vw[ivw].at == x) {
      vint.push_back({vw[ivw].lo, vw[ivw].hi});
      ++ivw;
    }
    vint = merge_intervals(std::move(vint));

    while (ihi < hw.size() && hw[by_hi[ihi]].hi == x) {
      const HWall& w = hw[by_hi[ihi]];
      auto it = active.find(w.y);
      (w.bnd ? it->second.bnd : it->second.cut) -= 1;
      if (it->second.bnd == 0 && it->second.cut == 0) active.erase(it);
      ++ihi;
    }
    while (ilo < hw.size() && hw[by_lo[ilo]].lo == x) {
      const HWall& w = hw[by_lo[ilo]];
      Counts& c = active[w.y];
      (w.bnd ? c.bnd : c.cut) += 1;
      ++ilo;
    }

    // Strips of this slab: parity over boundary walls, split at every wall.
    std::vector<OpenCell> strips;
    bool inside = false;
    Coord strip_start = 0;
    for (const auto& [y, c] : active) {
      if (c.bnd > 1) throw std::logic_error("overlapping boundary walls");
      if (inside) strips.push_back({strip_start, y, x});
      if (c.bnd) inside = !inside;
      if (inside) strip_start = y;
    }
    if (inside) throw std::logic_error("unclosed strip in slab");

    // Carry cells whose span is unchanged and uncrossed; close the rest.
    std::vector<OpenCell> next_open;
    next_open.reserve(strips.size());
    std::size_t a = 0, b = 0;
    auto emit = [&](const OpenCell& cell) {
      cells.push_back(rect_span(cell.start_x, x, cell.lo, cell.hi));
    };
    while (a < open.size() || b < strips.size()) {
      if (a < open.size() && b < strips.size() && open[a].lo == strips[b].lo &&
          open[a].hi == strips[b].hi) {
        if (any_open_overlap(vint, open[a].lo, open[a].hi)) {
          emit(open[a]);
          next_open.push_back(strips[b]);
        } else {
          next_open.push_back(open[a]);
        }
        ++a;
        ++b;
      } else if (b == strips.size() ||
                 (a < open.size() && std::pair(open[a].lo, open[a].hi) <
                                         std::pair(strips[b].lo, strips[b].hi))) {
        emit(open[a]);
        ++a;
      } else {
        next_open.push_back(strips[b]);
        ++b;
      }
    }
    open = std::move(next_open);
  }
  if (!open.empty()) throw std::logic_error("unclosed cell after sweep");

  std::sort(cells.begin(), cells.end(), rect_less);
  return cells;
}

}  // namespace rectcover::detail
