#include "rectcover/greedy.hpp"

#include <numeric>
#include <stdexcept>

#include "rectcover/errors.hpp"

namespace rectcover {

Cover greedy_cover(const BaseRectGraph& g, const CandidateSet& cs, const CostParams& params,
                   const GreedyOptions& opt) {
  const std::size_t n_cells = g.cells.size();
  const std::size_t n_cand = cs.rects.size();

  std::vector<std::int64_t> cell_off(n_cells + 1, 0);
  for (std::int32_t c : cs.cover_ids) ++cell_off[static_cast<std::size_t>(c) + 1];
  std::partial_sum(cell_off.begin(), cell_off.end(), cell_off.begin());
  std::vector<std::int32_t> cell_cands(cs.cover_ids.size());
  {
    std::vector<std::int64_t> cursor(cell_off.begin(), cell_off.end() - 1);
    for (std::size_t i = 0; i < n_cand; ++i) {
      for (std::int64_t k = cs.cover_offsets[i]; k < cs.cover_offsets[i + 1]; ++k) {
        const std::size_t c = static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)]);
        cell_cands[static_cast<std::size_t>(cursor[c]++)] = static_cast<std::int32_t>(i);
      }
    }
  }

  std::vector<std::int64_t> eff(n_cand);  // uncovered area each candidate still gains
  for (std::size_t i = 0; i < n_cand; ++i) eff[i] = cs.rects[i].area();
  std::vector<char> covered(n_cells, 0);
  std::size_t covered_count = 0;
  std::vector<Rect> picked;

  while (covered_count < n_cells) {
    if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline) {
      throw TimeoutError("greedy cover timed out");
    }
    std::size_t best = n_cand;
    for (std::size_t i = 0; i < n_cand; ++i) {
      if (eff[i] == 0) continue;
      if (best == n_cand) {
        best = i;
        continue;
      }
      const __int128 lhs = static_cast<__int128>(cs.cost[i]) * eff[best];
      const __int128 rhs = static_cast<__int128>(cs.cost[best]) * eff[i];
      if (lhs < rhs || (lhs == rhs && (eff[i] > eff[best] ||
                                       (eff[i] == eff[best] && rect_less(cs.rects[i], cs.rects[best]))))) {
        best = i;
      }
    }
    if (best == n_cand) throw std::logic_error("no candidate covers the remaining cells");
    picked.push_back(cs.rects[best]);
    for (std::int64_t k = cs.cover_offsets[best]; k < cs.cover_offsets[best + 1]; ++k) {
      const std::size_t c = static_cast<std::size_t>(cs.cover_ids[static_cast<std::size_t>(k)]);
      if (covered[c]) continue;
      covered[c] = 1;
      ++covered_count;
      const std::int64_t cell_area = g.cells[c].area();
      for (std::int64_t j = cell_off[c]; j < cell_off[c + 1]; ++j) {
        eff[static_cast<std::size_t>(cell_cands[static_cast<std::size_t>(j)])] -= cell_area;
      }
    }
  }
  return make_cover(std::move(picked), params);
}

Cover greedy_cover(const BaseRectGraph& g, const CostParams& params, const GreedyOptions& opt) {
  return greedy_cover(g, enumerate_powerset(g, params, opt.max_candidates), params, opt);
}

Cover greedy_cover(const Polygon& p, const CostParams& params, const GreedyOptions& opt) {
  return greedy_cover(build_graph(p), params, opt);
}

}  // namespace rectcover
