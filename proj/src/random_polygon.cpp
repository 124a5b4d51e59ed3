#include "rectcover/random_polygon.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rectcover/errors.hpp"
#include "rectcover/region.hpp"

namespace rectcover {

Polygon random_rect_union_polygon(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int k = 1 + static_cast<int>(rng() % 6);
    std::vector<Rect> rects;
    rects.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
      const auto span = [&rng]() {
        const Coord a = static_cast<Coord>(rng() % 13);
        Coord b = static_cast<Coord>(rng() % 13);
        while (b == a) b = static_cast<Coord>(rng() % 13);
        return std::pair<Coord, Coord>(std::min(a, b), std::max(a, b));
      };
      const auto [x_lo, x_hi] = span();
      const auto [y_lo, y_hi] = span();
      rects.push_back(rect_span(x_lo, x_hi, y_lo, y_hi));
    }
    try {
      std::vector<Polygon> parts = polygons_from_rects(rects);
      if (parts.size() == 1) return std::move(parts.front());
    } catch (const ValidationError&) {
      // Degenerate union (e.g. a hole pinched to a point); resample.
    }
  }
  throw std::logic_error("random polygon sampling failed to converge");
}

Polygon random_staircase(std::size_t n_vertices, std::uint64_t seed) {
  if (n_vertices < 4 || n_vertices % 2 != 0) {
    throw ValidationError("staircase vertex count must be even and at least 4");
  }
  const std::size_t columns = (n_vertices - 2) / 2;
  std::mt19937_64 rng(seed);

  std::vector<Coord> height(columns);
  std::vector<Coord> right_x(columns);
  Coord h = 1 + static_cast<Coord>(rng() % 40);
  Coord x = 0;
  for (std::size_t i = 0; i < columns; ++i) {
    height[i] = h;
    x += 1 + static_cast<Coord>(rng() % 3);
    right_x[i] = x;
    if (i + 1 < columns) {
      Coord next = h;
      while (next == h || next < 1 || next > 40) {
        const Coord step = 1 + static_cast<Coord>(rng() % 5);
        next = (rng() % 2 == 0) ? h + step : h - step;
      }
      h = next;
    }
  }

  std::vector<Point> ring;
  ring.reserve(n_vertices);
  ring.push_back({0, 0});
  ring.push_back({0, height[0]});
  for (std::size_t i = 0; i + 1 < columns; ++i) {
    ring.push_back({right_x[i], height[i]});
    ring.push_back({right_x[i], height[i + 1]});
  }
  ring.push_back({right_x[columns - 1], height[columns - 1]});
  ring.push_back({right_x[columns - 1], 0});
  return make_polygon(ring);
}

}  // namespace rectcover
