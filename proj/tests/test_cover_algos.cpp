#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "rectcover/errors.hpp"
#include "rectcover/greedy.hpp"
#include "rectcover/partition.hpp"
#include "rectcover/strip.hpp"
#include "support.hpp"

using namespace rectcover;
using namespace testsupport;

namespace {

const CostParams kUnit = make_cost_params(make_rational(1), make_rational(1));

bool is_tiling(const Polygon& p, const Cover& c) {
  Coord s = 0;
  for (const Rect& r : c.rects) s += r.area();
  return s == polygon_area(p);
}

}  // namespace

TEST_CASE("partition produces minimum tilings on the fixtures") {
  struct Expect {
    Polygon p;
    std::size_t count;
  };
  const Expect table[] = {
      {rect1(), 1}, {l6(), 2}, {plus12(), 3}, {towers(), 3}, {fig3(), 2}, {holed6(), 4},
  };
  for (const auto& [p, count] : table) {
    const Cover c = partition_cover(p, kUnit);
    CAPTURE(count);
    CHECK(c.rects.size() == count);
    CHECK(is_tiling(p, c));
    validate_cover(p, c);
    CHECK(min_partition_size(p) == count);
  }
}

TEST_CASE("partition detail exposes the chord structure") {
  // The plus: four concave vertices, four candidate chords in a 2x2 conflict
  // grid, an independent set of two, and 4 + 1 - 2 = 3 pieces.
  const PartitionDetail d = partition_cover_detail(plus12(), kUnit);
  CHECK(d.concave_count == 4);
  CHECK(d.chord_count == 4);
  CHECK(d.selected_chords.size() == 2);
  CHECK(d.cover.rects.size() == 3);

  // The L has one concave vertex and no chords.
  const PartitionDetail l = partition_cover_detail(l6(), kUnit);
  CHECK(l.concave_count == 1);
  CHECK(l.chord_count == 0);
  CHECK(l.selected_chords.empty());
  CHECK(l.cover.rects.size() == 2);

  // A square hole admits no chords: every candidate would lie on a hole edge.
  const PartitionDetail h = partition_cover_detail(holed6(), kUnit);
  CHECK(h.concave_count == 4);
  CHECK(h.chord_count == 0);
  CHECK(h.cover.rects.size() == 4);
}

TEST_CASE("partition minimizes cardinality on random unions") {
  for (const Polygon& p : small_corpus(40)) {
    const Cover c = partition_cover(p, kUnit);
    validate_cover(p, c);
    CHECK(is_tiling(p, c));
    CAPTURE(p.outer.size());
    CHECK(c.rects.size() == min_partition_size(p));
    if (p.holes.empty()) {
      const PartitionDetail d = partition_cover_detail(p, kUnit);
      CHECK(d.cover.rects.size() == d.concave_count + 1 - d.selected_chords.size());
    }
  }
}

TEST_CASE("strip cover emits maximal strips") {
  const BaseRectGraph g = build_graph(l6());
  CHECK(strip_rects(g) ==
        std::vector<Rect>{rect_span(0, 1, 0, 2), rect_span(0, 2, 0, 1)});

  const std::vector<Rect> plus_strips = strip_rects(build_graph(plus12()));
  CHECK(plus_strips ==
        std::vector<Rect>{rect_span(1, 2, 0, 3), rect_span(0, 3, 1, 2)});

  const std::vector<Rect> tower_strips = strip_rects(build_graph(towers()));
  CHECK(tower_strips.size() == 3);

  for (const Polygon& p : small_corpus(40)) {
    const BaseRectGraph gg = build_graph(p);
    const std::vector<Rect> strips = strip_rects(gg);
    std::size_t top_free = 0;
    for (std::size_t i = 0; i < gg.cells.size(); ++i) {
      if (gg.top[i] < 0) ++top_free;
    }
    CHECK(strips.size() <= top_free);
    for (const Rect& r : strips) {
      CAPTURE(r.top_left.x);
      CHECK(rect_is_maximal(gg, r));
      CHECK(pixel_rect_in(r, p));
    }
    validate_cover(gg, p, strip_cover(gg, kUnit));
  }
}

TEST_CASE("greedy follows exact cost-per-new-area ratios") {
  // On the L at alpha=1, beta=0 the two dominoes tie on ratio 1/2; the
  // row-major rule picks the vertical one first, and the horizontal domino
  // still beats the single cell afterwards.
  const Cover c = greedy_cover(l6(), make_cost_params(make_rational(1), make_rational(0)));
  CHECK(c.rects == std::vector<Rect>{rect_span(0, 1, 0, 2), rect_span(0, 2, 0, 1)});

  // With area cost dominating, covering cell by cell is optimal and greedy
  // finds it: every multi-cell candidate pays for overlap.
  const Cover fine = greedy_cover(l6(), make_cost_params(parse_rational("1/100"), make_rational(1)));
  CHECK(fine.rects.size() == 2);
  CHECK(fine.total_area == 3);
}

TEST_CASE("greedy covers random unions within its ratio guarantee") {
  const CostParams params[] = {
      make_cost_params(make_rational(1), make_rational(0)),
      make_cost_params(make_rational(1), make_rational(1)),
      make_cost_params(make_rational(3), make_rational(1)),
      make_cost_params(make_rational(1), make_rational(2)),
  };
  for (const Polygon& p : small_corpus(25)) {
    const BaseRectGraph g = build_graph(p);
    for (const CostParams& cp : params) {
      const Cover c = greedy_cover(g, cp);
      validate_cover(g, p, c);
      const Rational best = brute_min_cover_cost(g, cp);
      const double bound =
          (1.0 + std::log(static_cast<double>(g.cells.size()))) * to_double(best) + 1e-9;
      CAPTURE(g.cells.size());
      CHECK(to_double(c.total_cost) <= bound);
      CHECK(rational_le(best, c.total_cost));
    }
  }
}

TEST_CASE("greedy honours caps and deadlines") {
  CHECK_THROWS_AS(greedy_cover(plus12(), kUnit, {3, {}}), CapExceeded);
  GreedyOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
  CHECK_THROWS_AS(greedy_cover(brick(), kUnit, opt), TimeoutError);
}
