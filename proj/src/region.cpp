#include "rectcover/region.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rectcover {

namespace {

// Directions: 0 = east, 1 = north, 2 = west, 3 = south.
constexpr std::array<int, 4> kDx = {1, 0, -1, 0};
constexpr std::array<int, 4> kDy = {0, 1, 0, -1};

int left_of(int d) { return (d + 1) % 4; }
int right_of(int d) { return (d + 3) % 4; }

__int128 shoelace2(const std::vector<Point>& ring) {
  __int128 s = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    s += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
  }
  return s;
}

struct TracedRing {
  std::vector<Point> corners;
  __int128 area2 = 0;
  Point sample2x;  // a point inside the adjacent covered region, doubled coords
};

}  // namespace

std::vector<Polygon> polygons_from_rects(const std::vector<Rect>& rects) {
  if (rects.empty()) return {};

  std::vector<Coord> xs, ys;
  xs.reserve(rects.size() * 2);
  ys.reserve(rects.size() * 2);
  for (const Rect& r : rects) {
    xs.push_back(r.left());
    xs.push_back(r.right());
    ys.push_back(r.bottom());
    ys.push_back(r.top());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  const std::ptrdiff_t nx = static_cast<std::ptrdiff_t>(xs.size()) - 1;
  const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(ys.size()) - 1;
  std::vector<char> cov(static_cast<std::size_t>(nx * ny), 0);
  auto index_of = [](const std::vector<Coord>& v, Coord c) {
    return std::lower_bound(v.begin(), v.end(), c) - v.begin();
  };
  for (const Rect& r : rects) {
    auto i0 = index_of(xs, r.left()), i1 = index_of(xs, r.right());
    auto j0 = index_of(ys, r.bottom()), j1 = index_of(ys, r.top());
    for (auto i = i0; i < i1; ++i)
      for (auto j = j0; j < j1; ++j) cov[static_cast<std::size_t>(i * ny + j)] = 1;
  }
  auto covered = [&](std::ptrdiff_t ix, std::ptrdiff_t iy) {
    return ix >= 0 && iy >= 0 && ix < nx && iy < ny && cov[static_cast<std::size_t>(ix * ny + iy)];
  };

  // Directed boundary edges on grid nodes, covered region always on the left.
  const std::ptrdiff_t node_h = ny + 1;
  auto node = [&](std::ptrdiff_t ix, std::ptrdiff_t iy) {
    return static_cast<std::size_t>(ix * node_h + iy);
  };
  const std::size_t node_count = static_cast<std::size_t>((nx + 1) * node_h);
  std::array<std::vector<char>, 4> edge, used;
  for (int d = 0; d < 4; ++d) {
    edge[d].assign(node_count, 0);
    used[d].assign(node_count, 0);
  }
  for (std::ptrdiff_t ix = 0; ix < nx; ++ix) {
    for (std::ptrdiff_t iy = 0; iy <= ny; ++iy) {
      bool above = covered(ix, iy), below = covered(ix, iy - 1);
      if (above && !below) edge[0][node(ix, iy)] = 1;
      if (below && !above) edge[2][node(ix + 1, iy)] = 1;
    }
  }
  for (std::ptrdiff_t ix = 0; ix <= nx; ++ix) {
    for (std::ptrdiff_t iy = 0; iy < ny; ++iy) {
      bool west = covered(ix - 1, iy), east = covered(ix, iy);
      if (west && !east) edge[1][node(ix, iy)] = 1;
      if (east && !west) edge[3][node(ix, iy + 1)] = 1;
    }
  }

  std::vector<TracedRing> outers, holes;
  for (std::ptrdiff_t ix = 0; ix <= nx; ++ix) {
    for (std::ptrdiff_t iy = 0; iy <= ny; ++iy) {
      for (int d0 = 0; d0 < 4; ++d0) {
        if (!edge[d0][node(ix, iy)] || used[d0][node(ix, iy)]) continue;

        TracedRing ring;
        ring.sample2x = {2 * xs[static_cast<std::size_t>(ix)] + kDx[d0] + kDx[left_of(d0)],
                         2 * ys[static_cast<std::size_t>(iy)] + kDy[d0] + kDy[left_of(d0)]};
        std::ptrdiff_t cx = ix, cy = iy;
        int d = d0;
        while (true) {
          used[d][node(cx, cy)] = 1;
          cx += kDx[d];
          cy += kDy[d];
          // Sharpest left turn first: keeps pinched regions on separate rings.
          int nd = -1;
          for (int cand : {left_of(d), d, right_of(d)}) {
            if (edge[cand][node(cx, cy)]) {
              nd = cand;
              break;
            }
          }
          if (nd < 0) throw std::logic_error("boundary trace dead end");
          if (nd != d)
            ring.corners.push_back({xs[static_cast<std::size_t>(cx)], ys[static_cast<std::size_t>(cy)]});
          d = nd;
          if (cx == ix && cy == iy && d == d0) break;
        }
        ring.area2 = shoelace2(ring.corners);
        (ring.area2 > 0 ? outers : holes).push_back(std::move(ring));
      }
    }
  }

  // Attach each hole to the smallest enclosing outer ring.
  std::vector<std::vector<std::vector<Point>>> hole_rings(outers.size());
  for (const TracedRing& h : holes) {
    std::size_t best = outers.size();
    for (std::size_t o = 0; o < outers.size(); ++o) {
      if (!point_in_interior_2x(h.sample2x, Polygon{outers[o].corners, {}})) continue;
      if (best == outers.size() || outers[o].area2 < outers[best].area2) best = o;
    }
    if (best == outers.size()) throw std::logic_error("hole ring without an enclosing outer ring");
    hole_rings[best].push_back(h.corners);
  }

  std::vector<Polygon> result;
  result.reserve(outers.size());
  for (std::size_t o = 0; o < outers.size(); ++o)
    result.push_back(make_polygon(std::move(outers[o].corners), std::move(hole_rings[o])));
  std::sort(result.begin(), result.end(),
            [](const Polygon& a, const Polygon& b) { return lex_less(a.outer[0], b.outer[0]); });
  return result;
}

}  // namespace rectcover
