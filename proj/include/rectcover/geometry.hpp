#pragma once

#include <cstdint>
#include <vector>

#include "rectcover/errors.hpp"

namespace rectcover {

using Coord = std::int64_t;

// y grows upward; "top" always means the larger y.
struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Global iteration order: top row first, then left to right.
inline bool row_major_less(Point a, Point b) {
  return a.y != b.y ? a.y > b.y : a.x < b.x;
}

inline bool lex_less(Point a, Point b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

struct Rect {
  Point top_left;
  Point bottom_right;

  Coord left() const { return top_left.x; }
  Coord right() const { return bottom_right.x; }
  Coord top() const { return top_left.y; }
  Coord bottom() const { return bottom_right.y; }
  Coord width() const { return right() - left(); }
  Coord height() const { return top() - bottom(); }
  Coord area() const { return width() * height(); }

  // Closed containment: boundary contact counts as contained.
  bool contains(const Rect& o) const {
    return left() <= o.left() && o.right() <= right() &&
           bottom() <= o.bottom() && o.top() <= top();
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

// Throws ValidationError unless x_lo < x_hi and y_lo < y_hi.
Rect rect_span(Coord x_lo, Coord x_hi, Coord y_lo, Coord y_hi);

// Total order on rectangles: row-major top-left corner, then bottom-right.
inline bool rect_less(const Rect& a, const Rect& b) {
  if (!(a.top_left == b.top_left)) return row_major_less(a.top_left, b.top_left);
  return row_major_less(a.bottom_right, b.bottom_right);
}

// Canonical form: outer counter-clockwise, holes clockwise, every ring starting
// at its lexicographically smallest vertex, holes sorted by starting vertex.
struct Polygon {
  std::vector<Point> outer;
  std::vector<std::vector<Point>> holes;
};

// Validates and canonicalizes. Rules: rings have alternating axis-parallel
// edges, are simple, holes lie strictly inside the outer ring, two holes share
// at most one vertex. Throws ValidationError.
Polygon make_polygon(std::vector<Point> outer, std::vector<std::vector<Point>> holes = {});

Coord polygon_area(const Polygon& p);
std::size_t vertex_count(const Polygon& p);

Rect bounding_box(const Polygon& p);
// Throws ValidationError on empty input.
Rect bounding_box(const std::vector<Rect>& rects);

// Interior membership for a point given in doubled coordinates, so that cell
// and pixel centers stay integral. The point must not lie on the boundary.
bool point_in_interior_2x(Point doubled, const Polygon& p);

// True iff the interior of r is a subset of the interior of p; boundary
// contact is allowed.
bool rect_in_polygon(const Rect& r, const Polygon& p);

}  // namespace rectcover
