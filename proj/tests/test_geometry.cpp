#include <string>
#include <vector>

#include "doctest.h"
#include "rectcover/cover.hpp"
#include "rectcover/errors.hpp"
#include "rectcover/rational.hpp"
#include "rectcover/region.hpp"
#include "rectcover/svg.hpp"
#include "rectcover/wkt.hpp"
#include "support.hpp"

using namespace rectcover;
using namespace testsupport;

TEST_CASE("polygon canonical form is independent of input traversal") {
  const Polygon ref = l6();
  // Same ring, rotated start, reversed (clockwise) orientation.
  const Polygon rotated = make_polygon({{1, 2}, {0, 2}, {0, 0}, {2, 0}, {2, 1}, {1, 1}});
  const Polygon reversed = make_polygon({{0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}, {0, 0}});
  CHECK(rotated.outer == ref.outer);
  CHECK(reversed.outer == ref.outer);
  CHECK(ref.outer.front() == Point{0, 0});

  const Polygon holed = holed6();
  REQUIRE(holed.holes.size() == 1);
  // Hole canonicalized to clockwise from its lexicographic minimum.
  CHECK(holed.holes[0].front() == Point{2, 2});
  CHECK(holed.holes[0][1] == Point{2, 4});
}

TEST_CASE("polygon validation rejects malformed rings") {
  CHECK_THROWS_AS(make_polygon({{0, 0}, {2, 0}, {2, 2}}), ValidationError);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 1}, {1, 2}, {0, 2}}), ValidationError);
  // Collinear consecutive edges.
  CHECK_THROWS_AS(make_polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}),
                  ValidationError);
  // Self-crossing bowtie.
  CHECK_THROWS_AS(
      make_polygon({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {1, -1}, {0, -1}}), ValidationError);
  // Repeated vertex.
  CHECK_THROWS_AS(
      make_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 0}, {0, 0}, {0, 2}, {-1, 2}}),
      ValidationError);
  // Hole outside, hole touching the outer ring along an edge, hole leaning on
  // the outer ring at a vertex.
  CHECK_THROWS_AS(make_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, {{{5, 5}, {6, 5}, {6, 6}, {5, 6}}}),
                  ValidationError);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{0, 1}, {1, 1}, {1, 2}, {0, 2}}}),
                  ValidationError);
  CHECK_THROWS_AS(make_polygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}}),
                  ValidationError);
  // Two holes sharing two vertices (an edge-length contact).
  CHECK_THROWS_AS(make_polygon({{0, 0}, {6, 0}, {6, 6}, {0, 6}},
                               {{{1, 1}, {2, 1}, {2, 3}, {1, 3}},
                                {{2, 1}, {3, 1}, {3, 3}, {2, 3}}}),
                  ValidationError);
  // Two holes sharing exactly one vertex are fine.
  const Polygon pinched = make_polygon({{0, 0}, {6, 0}, {6, 6}, {0, 6}},
                                       {{{1, 1}, {2, 1}, {2, 2}, {1, 2}},
                                        {{2, 2}, {3, 2}, {3, 3}, {2, 3}}});
  CHECK(pinched.holes.size() == 2);
  CHECK(polygon_area(pinched) == 34);
}

TEST_CASE("polygon area and bounding boxes") {
  CHECK(polygon_area(rect1()) == 1);
  CHECK(polygon_area(l6()) == 3);
  CHECK(polygon_area(plus12()) == 5);
  CHECK(polygon_area(towers()) == 6);
  CHECK(polygon_area(holed6()) == 32);
  CHECK(polygon_area(brick()) == 152);
  CHECK(bounding_box(l6()) == rect_span(0, 2, 0, 2));
  CHECK(bounding_box(brick()) == rect_span(1, 15, 1, 15));
  CHECK_THROWS_AS(bounding_box(std::vector<Rect>{}), ValidationError);
}

TEST_CASE("interior membership agrees with an independent ray direction") {
  // The library shoots +y against horizontal edges, the oracle +x against
  // vertical ones; agreement over a dense doubled-coordinate grid is a real
  // cross-check. Boundary points are excluded by using odd coordinates.
  for (const Polygon& p : {l6(), plus12(), towers(), holed6(), brick()}) {
    const Rect box = bounding_box(p);
    for (Coord x = 2 * box.left() - 1; x <= 2 * box.right() + 1; x += 2) {
      for (Coord y = 2 * box.bottom() - 1; y <= 2 * box.top() + 1; y += 2) {
        CAPTURE(x);
        CAPTURE(y);
        CHECK(point_in_interior_2x({x, y}, p) == pixel_in({x, y}, p));
      }
    }
  }
}

TEST_CASE("rectangle-in-polygon matches the pixel oracle") {
  for (const Polygon& p : {l6(), plus12(), towers(), holed6()}) {
    const Rect box = bounding_box(p);
    for (Coord x1 = box.left(); x1 < box.right(); ++x1) {
      for (Coord x2 = x1 + 1; x2 <= box.right(); ++x2) {
        for (Coord y1 = box.bottom(); y1 < box.top(); ++y1) {
          for (Coord y2 = y1 + 1; y2 <= box.top(); ++y2) {
            const Rect r = rect_span(x1, x2, y1, y2);
            CAPTURE(r.top_left.x);
            CAPTURE(r.top_left.y);
            CHECK(rect_in_polygon(r, p) == pixel_rect_in(r, p));
          }
        }
      }
    }
  }
}

TEST_CASE("rational arithmetic stays normalized and exact") {
  CHECK(make_rational(4, 6) == Rational{2, 3});
  CHECK(make_rational(-4, -6) == Rational{2, 3});
  CHECK(make_rational(4, -6) == Rational{-2, 3});
  CHECK(rational_add({1, 3}, {1, 6}) == Rational{1, 2});
  CHECK(rational_mul({2, 3}, {3, 4}) == Rational{1, 2});
  CHECK(rational_scale({3, 7}, 14) == Rational{6, 1});
  CHECK(rational_less({1, 3}, {1, 2}));
  CHECK(!rational_less({1, 2}, {1, 2}));
  CHECK(rational_le({1, 2}, {1, 2}));
  CHECK(parse_rational("7") == Rational{7, 1});
  CHECK(parse_rational("-3") == Rational{-3, 1});
  CHECK(parse_rational("2/3") == Rational{2, 3});
  CHECK(parse_rational("0.25") == Rational{1, 4});
  CHECK(parse_rational("-1.5") == Rational{-3, 2});
  CHECK(to_string(Rational{2, 3}) == "2/3");
  CHECK(to_string(Rational{-7, 1}) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("wkt parses and serializes polygon sequences") {
  const std::string text = "POLYGON ((0 0, 2 0, 2 1, 1 1, 1 2, 0 2, 0 0))";
  const std::vector<Polygon> ps = parse_wkt(text);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].outer == l6().outer);

  // Round-trip, including holes and multipolygons.
  const std::vector<Polygon> many = {l6(), holed6(), plus12()};
  const std::vector<Polygon> back = parse_wkt(to_wkt(many));
  REQUIRE(back.size() == 3);
  for (std::size_t i = 0; i < many.size(); ++i) {
    CHECK(back[i].outer == many[i].outer);
    CHECK(back[i].holes == many[i].holes);
  }
  CHECK(to_wkt(many).substr(0, 12) == "MULTIPOLYGON");
  CHECK(to_wkt(l6()).substr(0, 7) == "POLYGON");

  // Several geometries in sequence.
  const std::vector<Polygon> seq = parse_wkt(to_wkt(l6()) + "\n" + to_wkt(holed6()) + "\n");
  CHECK(seq.size() == 2);
}

TEST_CASE("wkt rejects malformed input with a useful offset") {
  CHECK_THROWS_AS(parse_wkt("POLYGON ((0 0, 1 0, 1 1, 0 1, 0 0)"), ParseError);
  CHECK_THROWS_AS(parse_wkt("POLYGON ((0 0, 1.5 0, 1.5 1, 0 1, 0 0))"), ParseError);
  CHECK_THROWS_AS(parse_wkt("CIRCLE (0 0, 5)"), ParseError);
  // An unclosed ring is a parse-level problem, not a validation one.
  CHECK_THROWS_AS(parse_wkt("POLYGON ((0 0, 1 0, 1 1, 0 1))"), ParseError);
  try {
    parse_wkt("POLYGON ((0 0, 1 0, x 1, 0 1, 0 0))");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    // The offending 'x' sits at byte 20; the reported offset must point at it.
    CHECK(e.offset == 20);
  }
}

TEST_CASE("rectangle unions reassemble into canonical polygons") {
  // The brick tiling reassembles into the brick polygon itself.
  const std::vector<Polygon> ps = polygons_from_rects(brick_tiling());
  REQUIRE(ps.size() == 1);
  CHECK(polygon_area(ps[0]) == 152);
  CHECK(ps[0].holes.empty());

  // Overlap does not change the union.
  std::vector<Rect> overlapping = brick_tiling();
  overlapping.push_back(rect_span(5, 11, 6, 9));
  const std::vector<Polygon> ps2 = polygons_from_rects(overlapping);
  REQUIRE(ps2.size() == 1);
  CHECK(ps2[0].outer == ps[0].outer);

  // A frame produces a hole; disjoint and corner-touching parts come back as
  // separate polygons.
  const std::vector<Polygon> donut = polygons_from_rects(
      {rect_span(0, 6, 0, 2), rect_span(0, 2, 2, 4), rect_span(4, 6, 2, 4), rect_span(0, 6, 4, 6)});
  REQUIRE(donut.size() == 1);
  REQUIRE(donut[0].holes.size() == 1);
  CHECK(polygon_area(donut[0]) == 32);

  const std::vector<Polygon> apart =
      polygons_from_rects({rect_span(0, 1, 0, 1), rect_span(2, 3, 2, 3)});
  CHECK(apart.size() == 2);
  const std::vector<Polygon> corner =
      polygons_from_rects({rect_span(0, 2, 0, 2), rect_span(2, 4, 2, 4)});
  CHECK(corner.size() == 2);

  // A hole pinched against the outer boundary at a vertex is not a valid
  // polygon under the ring invariants.
  CHECK_THROWS_AS(polygons_from_rects({rect_span(0, 3, 0, 1), rect_span(0, 1, 1, 2),
                                       rect_span(2, 3, 1, 2), rect_span(0, 2, 2, 3)}),
                  ValidationError);
}

TEST_CASE("svg output is deterministic and self-contained") {
  const Cover c = make_cover({rect_span(0, 1, 0, 2), rect_span(0, 2, 0, 1)},
                             make_cost_params(make_rational(1), make_rational(1)));
  const std::string svg = serialize_svg(l6(), c.rects);
  CHECK(svg == serialize_svg(l6(), c.rects));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("viewBox") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
}
