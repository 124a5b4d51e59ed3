#include "rectcover/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "cell_sweep.hpp"

namespace rectcover {

namespace {

struct Chord {
  Point a, b;  // a < b along the chord's axis
};

// True if any wall in iv (merged intervals of one line) openly overlaps
// (lo, hi), or any perpendicular wall in cross touches the open segment.
bool segment_clean(const detail::WallSet& walls, bool vertical, Coord at, Coord lo, Coord hi) {
  const auto& collinear = vertical ? walls.vwalls : walls.hwalls;
  for (const detail::Wall& w : collinear) {
    if (w.at == at && w.lo < hi && w.hi > lo) return false;
  }
  const auto& cross = vertical ? walls.hwalls : walls.vwalls;
  for (const detail::Wall& w : cross) {
    if (w.at > lo && w.at < hi && w.lo <= at && w.hi >= at) return false;
  }
  return true;
}

// Candidate chords between consecutive cofacing concave vertices of one
// axis group. A chord must touch no edge and run through the interior.
std::vector<Chord> axis_chords(const Polygon& p, const detail::WallSet& walls,
                               const std::vector<Point>& concave, bool vertical) {
  std::map<Coord, std::vector<Coord>> groups;
  for (const Point& v : concave) {
    groups[vertical ? v.x : v.y].push_back(vertical ? v.y : v.x);
  }
  std::vector<Chord> out;
  for (auto& [at, pos] : groups) {
    std::sort(pos.begin(), pos.end());
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
      const Coord lo = pos[i], hi = pos[i + 1];
      if (!segment_clean(walls, vertical, at, lo, hi)) continue;
      // Untouched segment lies entirely inside or entirely outside.
      const Point mid2x = vertical ? Point{2 * at, lo + hi} : Point{lo + hi, 2 * at};
      if (!point_in_interior_2x(mid2x, p)) continue;
      if (vertical) {
        out.push_back({{at, lo}, {at, hi}});
      } else {
        out.push_back({{lo, at}, {hi, at}});
      }
    }
  }
  return out;
}

bool chords_conflict(const Chord& h, const Chord& v) {
  // Proper crossing.
  if (h.a.x < v.a.x && v.a.x < h.b.x && v.a.y < h.a.y && h.a.y < v.b.y) return true;
  // Shared endpoint.
  return h.a == v.a || h.a == v.b || h.b == v.a || h.b == v.b;
}

// Hopcroft-Karp maximum matching, left side = hchords, right side = vchords.
struct Matching {
  std::vector<std::int32_t> match_l, match_r;
  std::size_t size = 0;
};

Matching max_matching(const std::vector<std::vector<std::int32_t>>& adj, std::size_t n_right) {
  const std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  const std::size_t n_left = adj.size();
  Matching m;
  m.match_l.assign(n_left, -1);
  m.match_r.assign(n_right, -1);
  std::vector<std::int32_t> dist(n_left, 0);

  auto bfs = [&]() {
    std::queue<std::int32_t> q;
    for (std::size_t l = 0; l < n_left; ++l) {
      if (m.match_l[l] < 0) {
        dist[l] = 0;
        q.push(static_cast<std::int32_t>(l));
      } else {
        dist[l] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const std::int32_t l = q.front();
      q.pop();
      for (std::int32_t r : adj[static_cast<std::size_t>(l)]) {
        const std::int32_t l2 = m.match_r[static_cast<std::size_t>(r)];
        if (l2 < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(l2)] == kInf) {
          dist[static_cast<std::size_t>(l2)] = dist[static_cast<std::size_t>(l)] + 1;
          q.push(l2);
        }
      }
    }
    return found;
  };

  std::function<bool(std::int32_t)> dfs = [&](std::int32_t l) {
    for (std::int32_t r : adj[static_cast<std::size_t>(l)]) {
      const std::int32_t l2 = m.match_r[static_cast<std::size_t>(r)];
      if (l2 < 0 || (dist[static_cast<std::size_t>(l2)] == dist[static_cast<std::size_t>(l)] + 1 && dfs(l2))) {
        m.match_l[static_cast<std::size_t>(l)] = r;
        m.match_r[static_cast<std::size_t>(r)] = l;
        return true;
      }
    }
    dist[static_cast<std::size_t>(l)] = std::numeric_limits<std::int32_t>::max();
    return false;
  };

  while (bfs()) {
    for (std::size_t l = 0; l < n_left; ++l) {
      if (m.match_l[l] < 0 && dfs(static_cast<std::int32_t>(l))) ++m.size;
    }
  }
  return m;
}

}  // namespace

PartitionDetail partition_cover_detail(const Polygon& p, const CostParams& params) {
  const detail::WallSet boundary = detail::polygon_boundary_walls(p);
  const std::vector<detail::ConcaveVertex> cvs = detail::concave_vertices(p);
  std::vector<Point> concave;
  concave.reserve(cvs.size());
  for (const auto& cv : cvs) concave.push_back(cv.v);

  const std::vector<Chord> hchords = axis_chords(p, boundary, concave, false);
  const std::vector<Chord> vchords = axis_chords(p, boundary, concave, true);

  std::vector<std::vector<std::int32_t>> adj(hchords.size());
  for (std::size_t i = 0; i < hchords.size(); ++i) {
    for (std::size_t j = 0; j < vchords.size(); ++j) {
      if (chords_conflict(hchords[i], vchords[j])) adj[i].push_back(static_cast<std::int32_t>(j));
    }
  }
  const Matching m = max_matching(adj, vchords.size());

  // Koenig: alternate from unmatched left vertices; the independent set is
  // the reached left side plus the unreached right side.
  std::vector<char> seen_l(hchords.size(), 0), seen_r(vchords.size(), 0);
  std::queue<std::int32_t> q;
  for (std::size_t l = 0; l < hchords.size(); ++l) {
    if (m.match_l[l] < 0) {
      seen_l[l] = 1;
      q.push(static_cast<std::int32_t>(l));
    }
  }
  while (!q.empty()) {
    const std::int32_t l = q.front();
    q.pop();
    for (std::int32_t r : adj[static_cast<std::size_t>(l)]) {
      if (seen_r[static_cast<std::size_t>(r)]) continue;
      seen_r[static_cast<std::size_t>(r)] = 1;
      const std::int32_t l2 = m.match_r[static_cast<std::size_t>(r)];
      if (l2 >= 0 && !seen_l[static_cast<std::size_t>(l2)]) {
        seen_l[static_cast<std::size_t>(l2)] = 1;
        q.push(l2);
      }
    }
  }

  std::vector<Chord> selected;
  for (std::size_t l = 0; l < hchords.size(); ++l) {
    if (seen_l[l]) selected.push_back(hchords[l]);
  }
  for (std::size_t r = 0; r < vchords.size(); ++r) {
    if (!seen_r[r]) selected.push_back(vchords[r]);
  }
  if (selected.size() != hchords.size() + vchords.size() - m.size) {
    throw std::logic_error("independent chord set does not match Koenig bound");
  }

  // Cut along selected chords; remaining concave vertices are resolved with
  // vertical rays that may stop at chords as well as at the boundary.
  detail::WallSet augmented = boundary;
  std::vector<detail::Wall> hcuts, vcuts;
  std::vector<Point> endpoints;
  for (const Chord& c : selected) {
    endpoints.push_back(c.a);
    endpoints.push_back(c.b);
    if (c.a.x == c.b.x) {
      vcuts.push_back({c.a.x, c.a.y, c.b.y});
      augmented.vwalls.push_back({c.a.x, c.a.y, c.b.y});
    } else {
      hcuts.push_back({c.a.y, c.a.x, c.b.x});
      augmented.hwalls.push_back({c.a.y, c.a.x, c.b.x});
    }
  }
  std::sort(endpoints.begin(), endpoints.end(), lex_less);
  const detail::WallIndex index(augmented);
  for (const auto& cv : cvs) {
    if (std::binary_search(endpoints.begin(), endpoints.end(), cv.v, lex_less)) continue;
    if (auto sy = index.stop_y(cv.v, cv.vdir)) {
      vcuts.push_back({cv.v.x, std::min(cv.v.y, *sy), std::max(cv.v.y, *sy)});
    }
  }

  std::vector<Rect> cells = detail::cells_from_walls(boundary, detail::merge_walls(std::move(hcuts)),
                                                     detail::merge_walls(std::move(vcuts)));
  std::int64_t tiled = 0;
  for (const Rect& r : cells) tiled += r.area();
  if (tiled != polygon_area(p)) throw std::logic_error("partition does not tile the polygon");

  PartitionDetail out;
  out.cover = make_cover(std::move(cells), params);
  out.concave_count = cvs.size();
  out.chord_count = hchords.size() + vchords.size();
  out.selected_chords.reserve(selected.size());
  for (const Chord& c : selected) out.selected_chords.push_back({c.a, c.b});
  return out;
}

Cover partition_cover(const Polygon& p, const CostParams& params) {
  return partition_cover_detail(p, params).cover;
}

}  // namespace rectcover
