#include "rectcover/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace rectcover {

namespace {

constexpr Coord kCoordLimit = 1'000'000'000;  // keeps areas and scaled costs in int64

struct Seg {
  bool horizontal;
  Coord at;      // line coordinate (y for horizontal, x for vertical)
  Coord lo, hi;  // sorted span along the line
  Point a, b;    // original endpoints
  std::size_t ring;
};

__int128 shoelace2(const std::vector<Point>& ring) {
  __int128 s = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    s += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
  }
  return s;
}

// Crossing parity of an upward ray from a point in doubled coordinates.
// Counts horizontal edges above the point covering its x under the half-open
// rule, which is exact for points not on the ring.
int ring_crossings(Point doubled, const std::vector<Point>& ring) {
  int count = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % ring.size()];
    if (p.y != q.y) continue;
    Coord lo2 = 2 * std::min(p.x, q.x);
    Coord hi2 = 2 * std::max(p.x, q.x);
    if (2 * p.y > doubled.y && lo2 <= doubled.x && doubled.x < hi2) ++count;
  }
  return count;
}

void check_ring(const std::vector<Point>& ring, std::size_t ring_id, std::vector<Seg>& segs) {
  if (ring.size() < 4) throw ValidationError("ring needs at least 4 vertices");
  if (ring.size() % 2 != 0) throw ValidationError("ring vertex count must be even");

  std::set<std::pair<Coord, Coord>> seen;
  for (const Point& v : ring) {
    if (v.x < -kCoordLimit || v.x > kCoordLimit || v.y < -kCoordLimit || v.y > kCoordLimit)
      throw ValidationError("coordinate out of supported range");
    if (!seen.insert({v.x, v.y}).second) throw ValidationError("repeated vertex in ring");
  }

  bool prev_horizontal = false;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    Point a = ring[i];
    Point b = ring[(i + 1) % ring.size()];
    if (a == b) throw ValidationError("zero-length edge");
    bool horizontal = a.y == b.y;
    if (!horizontal && a.x != b.x) throw ValidationError("non-rectilinear edge");
    if (i > 0 && horizontal == prev_horizontal)
      throw ValidationError("consecutive edges share orientation");
    prev_horizontal = horizontal;
    Seg s;
    s.horizontal = horizontal;
    s.at = horizontal ? a.y : a.x;
    s.lo = horizontal ? std::min(a.x, b.x) : std::min(a.y, b.y);
    s.hi = horizontal ? std::max(a.x, b.x) : std::max(a.y, b.y);
    s.a = a;
    s.b = b;
    s.ring = ring_id;
    segs.push_back(s);
  }
  // closing edge vs first edge alternation: even count and the loop above
  // guarantee the first and last differ, so nothing more to check here.
}

using SharedPoints = std::map<std::pair<std::size_t, std::size_t>, std::set<std::pair<Coord, Coord>>>;

void note_shared(SharedPoints& shared, std::size_t r1, std::size_t r2, Point pt) {
  if (r1 == r2) return;
  auto key = std::minmax(r1, r2);
  shared[{key.first, key.second}].insert({pt.x, pt.y});
}

void check_collinear_group(std::vector<const Seg*>& group, SharedPoints& shared) {
  std::sort(group.begin(), group.end(),
            [](const Seg* a, const Seg* b) { return a->lo != b->lo ? a->lo < b->lo : a->hi < b->hi; });
  for (std::size_t i = 1; i < group.size(); ++i) {
    const Seg* prev = group[i - 1];
    const Seg* cur = group[i];
    if (prev->hi > cur->lo) throw ValidationError("collinear edges overlap");
    if (prev->hi == cur->lo) {
      Point pt = prev->horizontal ? Point{prev->hi, prev->at} : Point{prev->at, prev->hi};
      note_shared(shared, prev->ring, cur->ring, pt);
    }
  }
}

}  // namespace

Rect rect_span(Coord x_lo, Coord x_hi, Coord y_lo, Coord y_hi) {
  if (x_lo >= x_hi || y_lo >= y_hi) throw ValidationError("degenerate rectangle span");
  return Rect{{x_lo, y_hi}, {x_hi, y_lo}};
}

Polygon make_polygon(std::vector<Point> outer, std::vector<std::vector<Point>> holes) {
  std::vector<Seg> segs;
  check_ring(outer, 0, segs);
  for (std::size_t h = 0; h < holes.size(); ++h) check_ring(holes[h], h + 1, segs);

  SharedPoints shared;

  // Collinear overlap and touch checks per line.
  std::map<Coord, std::vector<const Seg*>> by_y, by_x;
  for (const Seg& s : segs) (s.horizontal ? by_y[s.at] : by_x[s.at]).push_back(&s);
  for (auto& [at, group] : by_y) check_collinear_group(group, shared);
  for (auto& [at, group] : by_x) check_collinear_group(group, shared);

  // Perpendicular crossings and T junctions.
  std::vector<const Seg*> verticals;
  for (const Seg& s : segs)
    if (!s.horizontal) verticals.push_back(&s);
  std::sort(verticals.begin(), verticals.end(),
            [](const Seg* a, const Seg* b) { return a->at < b->at; });
  for (const Seg& h : segs) {
    if (!h.horizontal) continue;
    auto lo = std::lower_bound(verticals.begin(), verticals.end(), h.lo,
                               [](const Seg* s, Coord x) { return s->at < x; });
    for (auto it = lo; it != verticals.end() && (*it)->at <= h.hi; ++it) {
      const Seg* v = *it;
      if (h.at < v->lo || h.at > v->hi) continue;
      Point pt{v->at, h.at};
      bool h_end = pt == h.a || pt == h.b;
      bool v_end = pt == v->a || pt == v->b;
      if (!h_end || !v_end) {
        if (!h_end && !v_end) throw ValidationError("edges cross");
        throw ValidationError("edge endpoint touches another edge");
      }
      note_shared(shared, h.ring, v->ring, pt);
    }
  }

  for (const auto& [rings, pts] : shared) {
    if (rings.first == 0) throw ValidationError("hole touches the outer ring");
    if (pts.size() > 1) throw ValidationError("two holes share more than one vertex");
  }

  // Holes strictly inside the outer ring, and not nested in each other. Shared
  // vertices are the only permitted contacts and are skipped in the nesting test.
  for (std::size_t h = 0; h < holes.size(); ++h) {
    for (const Point& v : holes[h]) {
      if (ring_crossings({2 * v.x, 2 * v.y}, outer) % 2 == 0)
        throw ValidationError("hole not strictly inside the outer ring");
    }
    for (std::size_t g = 0; g < holes.size(); ++g) {
      if (g == h) continue;
      for (const Point& v : holes[h]) {
        if (std::find(holes[g].begin(), holes[g].end(), v) != holes[g].end()) continue;
        if (ring_crossings({2 * v.x, 2 * v.y}, holes[g]) % 2 != 0)
          throw ValidationError("hole nested inside another hole");
      }
    }
  }

  // Canonical orientation and starting vertex.
  if (shoelace2(outer) < 0) std::reverse(outer.begin(), outer.end());
  for (auto& hole : holes)
    if (shoelace2(hole) > 0) std::reverse(hole.begin(), hole.end());

  auto rotate_to_lex_min = [](std::vector<Point>& ring) {
    auto it = std::min_element(ring.begin(), ring.end(), lex_less);
    std::rotate(ring.begin(), it, ring.end());
  };
  rotate_to_lex_min(outer);
  for (auto& hole : holes) rotate_to_lex_min(hole);
  std::sort(holes.begin(), holes.end(),
            [](const auto& a, const auto& b) { return lex_less(a[0], b[0]); });

  Polygon p;
  p.outer = std::move(outer);
  p.holes = std::move(holes);
  return p;
}

Coord polygon_area(const Polygon& p) {
  __int128 s2 = shoelace2(p.outer);
  for (const auto& hole : p.holes) s2 += shoelace2(hole);  // holes are clockwise, negative
  return static_cast<Coord>(s2 / 2);
}

std::size_t vertex_count(const Polygon& p) {
  std::size_t n = p.outer.size();
  for (const auto& hole : p.holes) n += hole.size();
  return n;
}

Rect bounding_box(const Polygon& p) {
  Coord xl = p.outer[0].x, xh = xl, yl = p.outer[0].y, yh = yl;
  for (const Point& v : p.outer) {
    xl = std::min(xl, v.x);
    xh = std::max(xh, v.x);
    yl = std::min(yl, v.y);
    yh = std::max(yh, v.y);
  }
  return rect_span(xl, xh, yl, yh);
}

Rect bounding_box(const std::vector<Rect>& rects) {
  if (rects.empty()) throw ValidationError("bounding box of an empty set");
  Coord xl = rects[0].left(), xh = rects[0].right();
  Coord yl = rects[0].bottom(), yh = rects[0].top();
  for (const Rect& r : rects) {
    xl = std::min(xl, r.left());
    xh = std::max(xh, r.right());
    yl = std::min(yl, r.bottom());
    yh = std::max(yh, r.top());
  }
  return rect_span(xl, xh, yl, yh);
}

bool point_in_interior_2x(Point doubled, const Polygon& p) {
  int count = ring_crossings(doubled, p.outer);
  for (const auto& hole : p.holes) count += ring_crossings(doubled, hole);
  return count % 2 == 1;
}

bool rect_in_polygon(const Rect& r, const Polygon& p) {
  // No edge may pass through the rectangle's interior; then any interior point
  // (the center below, in doubled coordinates) decides containment.
  auto ring_clear = [&r](const std::vector<Point>& ring) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& a = ring[i];
      const Point& b = ring[(i + 1) % ring.size()];
      if (a.y == b.y) {
        if (r.bottom() < a.y && a.y < r.top() &&
            std::max(std::min(a.x, b.x), r.left()) < std::min(std::max(a.x, b.x), r.right()))
          return false;
      } else {
        if (r.left() < a.x && a.x < r.right() &&
            std::max(std::min(a.y, b.y), r.bottom()) < std::min(std::max(a.y, b.y), r.top()))
          return false;
      }
    }
    return true;
  };
  if (!ring_clear(p.outer)) return false;
  for (const auto& hole : p.holes)
    if (!ring_clear(hole)) return false;
  return point_in_interior_2x({r.left() + r.right(), r.bottom() + r.top()}, p);
}

}  // namespace rectcover
