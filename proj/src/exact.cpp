#include "rectcover/exact.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "rectcover/errors.hpp"
#include "rectcover/partition.hpp"

namespace rectcover {

namespace {

struct Searcher {
  const BaseRectGraph& g;
  const CandidateSet& cs;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  // Candidates in nondecreasing cost-per-area order; cell lists follow it.
  std::vector<std::int32_t> rate_order;
  std::vector<std::vector<std::int32_t>> cell_cands;  // per cell, rate-ordered

  std::vector<std::int32_t> cover_count;  // per cell
  std::vector<std::int64_t> avail;        // per cell: non-excluded candidates
  std::vector<char> excluded;             // by rate index
  std::size_t uncovered = 0;

  std::vector<std::int32_t> picks;  // rate indices
  std::vector<std::int32_t> best_picks;
  __int128 best_cost = 0;
  std::int64_t nodes = 0;

  std::vector<__int128> slack;           // dual-ascent scratch, by rate index
  std::vector<std::int32_t> cell_order;  // dual-ascent scratch

  Searcher(const BaseRectGraph& graph, const CandidateSet& cands,
           const std::optional<std::chrono::steady_clock::time_point>& dl)
      : g(graph), cs(cands), deadline(dl) {
    const std::size_t n_cand = cs.rects.size();
    rate_order.resize(n_cand);
    std::iota(rate_order.begin(), rate_order.end(), 0);
    std::sort(rate_order.begin(), rate_order.end(), [&](std::int32_t a, std::int32_t b) {
      const __int128 lhs = static_cast<__int128>(cs.cost[static_cast<std::size_t>(a)]) *
                           cs.rects[static_cast<std::size_t>(b)].area();
      const __int128 rhs = static_cast<__int128>(cs.cost[static_cast<std::size_t>(b)]) *
                           cs.rects[static_cast<std::size_t>(a)].area();
      if (lhs != rhs) return lhs < rhs;
      return rect_less(cs.rects[static_cast<std::size_t>(a)], cs.rects[static_cast<std::size_t>(b)]);
    });

    cell_cands.resize(g.cells.size());
    for (std::size_t ri = 0; ri < n_cand; ++ri) {
      const std::size_t orig = static_cast<std::size_t>(rate_order[ri]);
      for (std::int64_t k = cs.cover_offsets[orig]; k < cs.cover_offsets[orig + 1]; ++k) {
        cell_cands[static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)])].push_back(
            static_cast<std::int32_t>(ri));
      }
    }
    cover_count.assign(g.cells.size(), 0);
    avail.assign(g.cells.size(), 0);
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      avail[c] = static_cast<std::int64_t>(cell_cands[c].size());
    }
    excluded.assign(n_cand, 0);
    uncovered = g.cells.size();
  }

  std::int64_t cand_cost(std::int32_t ri) const {
    return cs.cost[static_cast<std::size_t>(rate_order[static_cast<std::size_t>(ri)])];
  }
  const Rect& cand_rect(std::int32_t ri) const {
    return cs.rects[static_cast<std::size_t>(rate_order[static_cast<std::size_t>(ri)])];
  }
  std::pair<std::int64_t, std::int64_t> cand_cells(std::int32_t ri) const {
    const std::size_t orig = static_cast<std::size_t>(rate_order[static_cast<std::size_t>(ri)]);
    return {cs.cover_offsets[orig], cs.cover_offsets[orig + 1]};
  }

  long double remaining_bound() const {
    long double lb = 0;
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      if (cover_count[c] > 0) continue;
      std::int32_t cheapest = -1;
      for (std::int32_t ri : cell_cands[c]) {
        if (!excluded[static_cast<std::size_t>(ri)]) {
          cheapest = ri;
          break;
        }
      }
      if (cheapest < 0) return -1;  // some cell has no candidate left
      lb += static_cast<long double>(g.cells[c].area()) *
            (static_cast<long double>(cand_cost(cheapest)) /
             static_cast<long double>(cand_rect(cheapest).area()));
    }
    return lb * (1.0L - 1e-9L);
  }

  // Second, independent lower bound: greedy dual ascent for the covering LP.
  // Cell prices start at zero; each uncovered cell, most constrained first,
  // absorbs the smallest remaining slack among the candidates containing it.
  // The prices stay dual feasible throughout, so their sum is a valid lower
  // bound, and the arithmetic is exact integer.
  __int128 dual_bound() {
    slack.assign(cs.rects.size(), 0);
    for (std::size_t ri = 0; ri < cs.rects.size(); ++ri) {
      if (!excluded[ri]) slack[ri] = cand_cost(static_cast<std::int32_t>(ri));
    }
    cell_order.clear();
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      if (cover_count[c] == 0) cell_order.push_back(static_cast<std::int32_t>(c));
    }
    std::sort(cell_order.begin(), cell_order.end(), [&](std::int32_t a, std::int32_t b) {
      if (avail[static_cast<std::size_t>(a)] != avail[static_cast<std::size_t>(b)]) {
        return avail[static_cast<std::size_t>(a)] < avail[static_cast<std::size_t>(b)];
      }
      return a < b;
    });
    __int128 lb = 0;
    for (int pass = 0; pass < 3; ++pass) {
      bool raised = false;
      for (std::int32_t cc : cell_order) {
        const std::size_t c = static_cast<std::size_t>(cc);
        __int128 delta = -1;
        for (std::int32_t ri : cell_cands[c]) {
          if (excluded[static_cast<std::size_t>(ri)]) continue;
          if (delta < 0 || slack[static_cast<std::size_t>(ri)] < delta) {
            delta = slack[static_cast<std::size_t>(ri)];
          }
        }
        if (delta <= 0) continue;
        lb += delta;
        raised = true;
        for (std::int32_t ri : cell_cands[c]) {
          if (!excluded[static_cast<std::size_t>(ri)]) slack[static_cast<std::size_t>(ri)] -= delta;
        }
      }
      if (!raised) break;
    }
    return lb;
  }

  void apply(std::int32_t ri, int delta) {
    const auto [k0, k1] = cand_cells(ri);
    for (std::int64_t k = k0; k < k1; ++k) {
      const std::size_t c = static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)]);
      cover_count[c] += delta;
      if (delta > 0 && cover_count[c] == 1) --uncovered;
      if (delta < 0 && cover_count[c] == 0) ++uncovered;
    }
  }

  void dfs(__int128 cur_cost) {
    // Check on the first node too, so an expired deadline aborts immediately.
    if ((++nodes & 1023) == 1 && deadline &&
        std::chrono::steady_clock::now() > *deadline) {
      throw TimeoutError("exact solver timed out");
    }
    if (uncovered == 0) {
      if (cur_cost < best_cost) {
        best_cost = cur_cost;
        best_picks = picks;
      }
      return;
    }
    const long double lb = remaining_bound();
    if (lb < 0) return;  // infeasible under current exclusions
    if (static_cast<long double>(cur_cost) + lb >= static_cast<long double>(best_cost)) return;
    const __int128 dual_lb = dual_bound();
    if (cur_cost + dual_lb >= best_cost) return;

    // Reduced-cost fixing: a completion that uses candidate R costs at least
    // dual_lb + slack(R), so candidates whose slack meets the remaining gap
    // cannot appear in any improvement below this node.
    const __int128 gap = best_cost - cur_cost - dual_lb;
    std::vector<std::int32_t> fixed;
    for (std::size_t ri = 0; ri < cs.rects.size(); ++ri) {
      if (excluded[ri] || slack[ri] < gap) continue;
      excluded[ri] = 1;
      fixed.push_back(static_cast<std::int32_t>(ri));
      const auto [k0, k1] = cand_cells(static_cast<std::int32_t>(ri));
      for (std::int64_t k = k0; k < k1; ++k) {
        --avail[static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)])];
      }
    }
    const auto unfix = [&] {
      for (std::int32_t ri : fixed) {
        excluded[static_cast<std::size_t>(ri)] = 0;
        const auto [k0, k1] = cand_cells(ri);
        for (std::int64_t k = k0; k < k1; ++k) {
          ++avail[static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)])];
        }
      }
    };

    // Branch on the uncovered cell with the fewest remaining candidates.
    std::size_t branch_cell = g.cells.size();
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      if (cover_count[c] > 0) continue;
      if (branch_cell == g.cells.size() || avail[c] < avail[branch_cell]) branch_cell = c;
    }
    if (avail[branch_cell] == 0) {
      unfix();
      return;
    }

    std::vector<std::int32_t> children;
    children.reserve(static_cast<std::size_t>(avail[branch_cell]));
    for (std::int32_t ri : cell_cands[branch_cell]) {
      if (!excluded[static_cast<std::size_t>(ri)]) children.push_back(ri);
    }
    std::vector<std::int32_t> locally_excluded;
    for (std::int32_t ri : children) {
      picks.push_back(ri);
      apply(ri, +1);
      dfs(cur_cost + cand_cost(ri));
      apply(ri, -1);
      picks.pop_back();
      // Later siblings may not reuse this candidate.
      excluded[static_cast<std::size_t>(ri)] = 1;
      locally_excluded.push_back(ri);
      const auto [k0, k1] = cand_cells(ri);
      for (std::int64_t k = k0; k < k1; ++k) {
        --avail[static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)])];
      }
    }
    for (std::int32_t ri : locally_excluded) {
      excluded[static_cast<std::size_t>(ri)] = 0;
      const auto [k0, k1] = cand_cells(ri);
      for (std::int64_t k = k0; k < k1; ++k) {
        ++avail[static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)])];
      }
    }
    unfix();
  }
};

Cover solve_on(const BaseRectGraph& g, const Polygon& p, const CostParams& params,
               const ExactOptions& opt) {
  const CandidateSet cs = enumerate_powerset(g, params, opt.max_candidates);
  const Cover incumbent = partition_cover(p, params);

  Searcher s(g, cs, opt.deadline);
  const CostScale scale = make_scale(params);
  __int128 inc_cost = 0;
  for (const Rect& r : incumbent.rects) inc_cost += scaled_rect_cost(scale, r.area());
  s.best_cost = inc_cost;
  s.dfs(0);

  std::vector<Rect> rects;
  if (s.best_picks.empty() && s.best_cost == inc_cost) {
    rects = incumbent.rects;
  } else {
    rects.reserve(s.best_picks.size());
    for (std::int32_t ri : s.best_picks) rects.push_back(s.cand_rect(ri));
  }
  std::sort(rects.begin(), rects.end(), rect_less);
  return make_cover(std::move(rects), params);
}

std::string lp_var(const Rect& r) {
  const auto part = [](Coord v) {
    return v < 0 ? "m" + std::to_string(-v) : std::to_string(v);
  };
  return "x_" + part(r.top_left.x) + "_" + part(r.top_left.y) + "_" + part(r.bottom_right.x) +
         "_" + part(r.bottom_right.y);
}

// Exact decimal expansion when the reduced denominator is 2^a 5^b, else a
// 12-digit approximation.
std::string lp_number(const Rational& q) {
  if (q.den == 1) return std::to_string(q.num);
  std::int64_t rest = q.den;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lf",
                  static_cast<long double>(q.num) / static_cast<long double>(q.den));
    return buf;
  }
  const int digits = std::max(twos, fives);
  __int128 scaled = q.num;
  for (int i = 0; i < digits - twos; ++i) scaled *= 2;
  for (int i = 0; i < digits - fives; ++i) scaled *= 5;
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s;
  while (scaled > 0) {
    s += static_cast<char>('0' + static_cast<int>(scaled % 10));
    scaled /= 10;
  }
  while (static_cast<int>(s.size()) <= digits) s += '0';
  s.insert(s.begin() + digits, '.');
  std::reverse(s.begin(), s.end());
  return (neg ? "-" : "") + s;
}

}  // namespace

Cover solve_exact(const Polygon& p, const CostParams& params, const ExactOptions& opt) {
  return solve_on(build_graph(p), p, params, opt);
}

Cover solve_exact_grid(const Polygon& p, const CostParams& params, const ExactOptions& opt) {
  return solve_on(build_cell_graph(grid_rectangles(p)), p, params, opt);
}

void emit_lp(std::ostream& os, const Polygon& p, const CostParams& params, LpVariant variant,
             std::int64_t cap) {
  const BaseRectGraph g = build_graph(p);
  const std::vector<Rect> rects = variant == LpVariant::weighted ? enumerate_powerset_rects(g, cap)
                                                                 : maximal_rectangles(g, cap);

  os << "Minimize\n obj:";
  for (std::size_t i = 0; i < rects.size(); ++i) {
    os << (i == 0 ? " " : " + ");
    if (variant == LpVariant::weighted) os << lp_number(rect_cost(rects[i], params)) << " ";
    os << lp_var(rects[i]);
  }
  os << "\nSubject To\n";
  std::vector<std::vector<std::size_t>> rows(g.cells.size());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    g.for_each_cell_in(rects[i], [&](std::int32_t c) { rows[static_cast<std::size_t>(c)].push_back(i); });
  }
  for (std::size_t c = 0; c < rows.size(); ++c) {
    os << " c" << c << ":";
    for (std::size_t k = 0; k < rows[c].size(); ++k) {
      os << (k == 0 ? " " : " + ") << lp_var(rects[rows[c][k]]);
    }
    os << " >= 1\n";
  }
  os << "Binary\n";
  for (const Rect& r : rects) os << " " << lp_var(r);
  os << "\nEnd\n";
}

}  // namespace rectcover
