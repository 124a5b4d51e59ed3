#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "rectcover/errors.hpp"
#include "rectcover/exact.hpp"
#include "rectcover/greedy.hpp"
#include "rectcover/partition.hpp"
#include "rectcover/strip.hpp"
#include "support.hpp"

using namespace rectcover;
using namespace testsupport;

namespace {

const CostParams kParamSets[] = {
    make_cost_params(make_rational(1), make_rational(0)),
    make_cost_params(make_rational(1), make_rational(1)),
    make_cost_params(make_rational(3), make_rational(1)),
    make_cost_params(make_rational(1), make_rational(2)),
    make_cost_params(make_rational(0), make_rational(1)),
};

}  // namespace

TEST_CASE("exact solver matches brute force on the fixtures") {
  for (const Polygon& p : {rect1(), l6(), plus12(), towers(), fig3(), holed6()}) {
    const BaseRectGraph g = build_graph(p);
    for (const CostParams& cp : kParamSets) {
      const Cover c = solve_exact(p, cp);
      validate_cover(g, p, c);
      CAPTURE(g.cells.size());
      CHECK(c.total_cost == brute_min_cover_cost(g, cp));
      CHECK(c.total_cost == solve_exact_grid(p, cp).total_cost);
    }
  }
}

TEST_CASE("exact solver matches brute force on random unions") {
  for (const Polygon& p : small_corpus(25)) {
    const BaseRectGraph g = build_graph(p);
    for (const CostParams& cp : kParamSets) {
      const Cover c = solve_exact(p, cp);
      validate_cover(g, p, c);
      CHECK(c.total_cost == brute_min_cover_cost(g, cp));
    }
  }
}

TEST_CASE("exact never loses to the heuristics") {
  for (const Polygon& p : small_corpus(20)) {
    const BaseRectGraph g = build_graph(p);
    for (const CostParams& cp : kParamSets) {
      const Rational best = solve_exact(p, cp).total_cost;
      CHECK(rational_le(best, partition_cover(p, cp).total_cost));
      CHECK(rational_le(best, strip_cover(g, cp).total_cost));
      CHECK(rational_le(best, greedy_cover(g, cp).total_cost));
    }
  }
}

TEST_CASE("exact solver handles the brick compound") {
  const Polygon p = brick();
  // Reference covers: 9 rectangles of area 376 and 13 of area 156 are valid.
  const Cover nine = make_cover(brick_cover9(), make_cost_params(make_rational(1), make_rational(0)));
  validate_cover(p, nine);
  CHECK(nine.total_cost == make_rational(9));
  const Cover thirteen =
      make_cover(brick_cover13(), make_cost_params(make_rational(3), make_rational(1)));
  validate_cover(p, thirteen);
  CHECK(thirteen.total_cost == make_rational(195));

  CHECK(solve_exact(p, make_cost_params(make_rational(1), make_rational(0))).rects.size() == 9);
  CHECK(solve_exact(p, make_cost_params(make_rational(3), make_rational(1))).total_cost ==
        make_rational(195));
  CHECK(solve_exact(p, make_cost_params(make_rational(1), make_rational(2))).total_cost ==
        make_rational(319));
}

TEST_CASE("exact honours caps and deadlines") {
  CHECK_THROWS_AS(solve_exact(plus12(), kParamSets[1], {3, {}}), CapExceeded);
  ExactOptions opt;
  opt.deadline = std::chrono::steady_clock::now() - std::chrono::milliseconds(1);
  CHECK_THROWS_AS(solve_exact(brick(), kParamSets[0], opt), TimeoutError);
}

namespace {

struct ParsedLp {
  std::vector<std::pair<std::string, Rational>> objective;  // variable, coefficient
  std::size_t constraints = 0;
  std::vector<std::string> binaries;
};

ParsedLp parse_lp(const std::string& text) {
  ParsedLp out;
  std::istringstream in(text);
  std::string line;
  enum { kNone, kObjective, kConstraints, kBinary } section = kNone;
  while (std::getline(in, line)) {
    if (line == "Minimize") {
      section = kObjective;
      continue;
    }
    if (line == "Subject To") {
      section = kConstraints;
      continue;
    }
    if (line == "Binary") {
      section = kBinary;
      continue;
    }
    if (line == "End") break;
    std::istringstream ls(line);
    if (section == kObjective) {
      std::string tok;
      ls >> tok;  // "obj:"
      Rational coef = make_rational(1);
      bool have_coef = false;
      while (ls >> tok) {
        if (tok == "+") continue;
        if (tok[0] == 'x') {
          out.objective.push_back({tok, have_coef ? coef : make_rational(1)});
          have_coef = false;
        } else {
          coef = parse_rational(tok);
          have_coef = true;
        }
      }
    } else if (section == kConstraints) {
      ++out.constraints;
    } else if (section == kBinary) {
      std::string tok;
      while (ls >> tok) out.binaries.push_back(tok);
    }
  }
  return out;
}

Coord lp_var_area(const std::string& name) {
  // x_{x1}_{y1}_{x2}_{y2} with 'm' marking negatives.
  std::vector<Coord> vals;
  std::size_t i = 2;
  while (i <= name.size()) {
    std::size_t j = name.find('_', i);
    if (j == std::string::npos) j = name.size();
    std::string field = name.substr(i, j - i);
    Coord sign = 1;
    if (!field.empty() && field[0] == 'm') {
      sign = -1;
      field = field.substr(1);
    }
    vals.push_back(sign * std::stoll(field));
    i = j + 1;
  }
  REQUIRE(vals.size() == 4);
  return (vals[2] - vals[0]) * (vals[1] - vals[3]);
}

}  // namespace

TEST_CASE("lp emission covers every cell with correctly priced variables") {
  const CostParams cp = make_cost_params(make_rational(3), make_rational(1));
  std::ostringstream weighted;
  emit_lp(weighted, l6(), cp, LpVariant::weighted);
  const ParsedLp w = parse_lp(weighted.str());
  CHECK(w.objective.size() == 5);
  CHECK(w.constraints == 3);
  CHECK(w.binaries.size() == 5);
  for (const auto& [var, coef] : w.objective) {
    CHECK(coef == rational_add(cp.alpha, rational_scale(cp.beta, lp_var_area(var))));
  }

  std::ostringstream unweighted;
  emit_lp(unweighted, l6(), cp, LpVariant::unweighted);
  const ParsedLp u = parse_lp(unweighted.str());
  CHECK(u.objective.size() == 2);
  CHECK(u.constraints == 3);
  for (const auto& [var, coef] : u.objective) CHECK(coef == make_rational(1));

  // Deterministic output.
  std::ostringstream again;
  emit_lp(again, l6(), cp, LpVariant::weighted);
  CHECK(again.str() == weighted.str());

  // Fractional prices serialize exactly.
  std::ostringstream frac;
  emit_lp(frac, l6(), make_cost_params(parse_rational("1/2"), parse_rational("1/4")),
          LpVariant::weighted);
  const ParsedLp f = parse_lp(frac.str());
  for (const auto& [var, coef] : f.objective) {
    CHECK(coef == rational_add(parse_rational("1/2"),
                               rational_scale(parse_rational("1/4"), lp_var_area(var))));
  }

  // Negative coordinates use the 'm' marker and parse back.
  const Polygon shifted = make_polygon({{-2, -2}, {0, -2}, {0, -1}, {-1, -1}, {-1, 0}, {-2, 0}});
  std::ostringstream neg;
  emit_lp(neg, shifted, cp, LpVariant::weighted);
  const ParsedLp n = parse_lp(neg.str());
  CHECK(n.objective.size() == 5);
  for (const auto& [var, coef] : n.objective) {
    CHECK(coef == rational_add(cp.alpha, rational_scale(cp.beta, lp_var_area(var))));
  }
}
