#include "rectcover/postprocess.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "rectcover/errors.hpp"
#include "rectcover/partition.hpp"
#include "rectcover/region.hpp"

namespace rectcover {

namespace {

struct Coverage {
  std::vector<std::int32_t> counts;                   // per cell
  std::vector<std::vector<std::int32_t>> rect_cells;  // per cover rectangle
};

Coverage build_coverage(const BaseRectGraph& g, const std::vector<Rect>& rects) {
  Coverage cov;
  cov.counts.assign(g.cells.size(), 0);
  cov.rect_cells.resize(rects.size());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    cov.rect_cells[i] = g.cells_in(rects[i]);
    for (std::int32_t c : cov.rect_cells[i]) ++cov.counts[static_cast<std::size_t>(c)];
  }
  return cov;
}

std::vector<std::int32_t> unique_cells(const Coverage& cov, std::size_t i) {
  std::vector<std::int32_t> u;
  for (std::int32_t c : cov.rect_cells[i]) {
    if (cov.counts[static_cast<std::size_t>(c)] == 1) u.push_back(c);
  }
  return u;
}

Rect cells_bbox(const BaseRectGraph& g, const std::vector<std::int32_t>& ids) {
  std::vector<Rect> rs;
  rs.reserve(ids.size());
  for (std::int32_t c : ids) rs.push_back(g.cells[static_cast<std::size_t>(c)]);
  return bounding_box(rs);
}

std::int64_t scost(const CostScale& s, const Rect& r) { return scaled_rect_cost(s, r.area()); }

// Edge-connected groups of the given cells, each sorted, ordered by their
// smallest cell id.
std::vector<std::vector<std::int32_t>> cell_groups(const BaseRectGraph& g,
                                                   const std::vector<std::int32_t>& ids) {
  std::vector<char> in_set(g.cells.size(), 0), visited(g.cells.size(), 0);
  for (std::int32_t c : ids) in_set[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<std::int32_t>> groups;
  for (std::int32_t c : ids) {
    if (visited[static_cast<std::size_t>(c)]) continue;
    std::vector<std::int32_t> group, stack{c};
    visited[static_cast<std::size_t>(c)] = 1;
    while (!stack.empty()) {
      const std::int32_t u = stack.back();
      stack.pop_back();
      group.push_back(u);
      for (std::int32_t v : {g.left[static_cast<std::size_t>(u)], g.top[static_cast<std::size_t>(u)],
                             g.right[static_cast<std::size_t>(u)], g.bottom[static_cast<std::size_t>(u)]}) {
        if (v >= 0 && in_set[static_cast<std::size_t>(v)] && !visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }
  return groups;
}

// Shared skeleton for the split passes: each rectangle is replaced by the
// fragments the callback proposes for its uniquely covered cells, when the
// fragments are strictly cheaper in total.
template <typename Fragments>
Cover split_pass(const BaseRectGraph& g, const Cover& c, Fragments&& fragments_for) {
  Coverage cov = build_coverage(g, c.rects);
  const CostScale scale = make_scale(c.params);
  std::vector<std::vector<Rect>> slots(c.rects.size());
  for (std::size_t i = 0; i < c.rects.size(); ++i) {
    slots[i] = {c.rects[i]};
    const std::vector<std::int32_t> u = unique_cells(cov, i);
    std::vector<Rect> frags;
    if (!fragments_for(u, c.params, frags)) continue;
    __int128 frag_cost = 0;
    for (const Rect& f : frags) frag_cost += scost(scale, f);
    if (frag_cost >= static_cast<__int128>(scost(scale, c.rects[i]))) continue;
    for (std::int32_t cell : cov.rect_cells[i]) --cov.counts[static_cast<std::size_t>(cell)];
    cov.rect_cells[i].clear();
    for (const Rect& f : frags) {
      g.for_each_cell_in(f, [&](std::int32_t cell) { ++cov.counts[static_cast<std::size_t>(cell)]; });
    }
    slots[i] = std::move(frags);
  }
  std::vector<Rect> out;
  for (const auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return make_cover(std::move(out), c.params);
}

}  // namespace

Cover prune_cover(const BaseRectGraph& g, const Cover& c) {
  Coverage cov = build_coverage(g, c.rects);
  std::vector<Rect> out;
  out.reserve(c.rects.size());
  for (std::size_t i = 0; i < c.rects.size(); ++i) {
    const bool redundant = std::all_of(cov.rect_cells[i].begin(), cov.rect_cells[i].end(),
                                       [&](std::int32_t cell) { return cov.counts[static_cast<std::size_t>(cell)] >= 2; });
    if (redundant) {
      for (std::int32_t cell : cov.rect_cells[i]) --cov.counts[static_cast<std::size_t>(cell)];
    } else {
      out.push_back(c.rects[i]);
    }
  }
  return make_cover(std::move(out), c.params);
}

Cover trim_cover(const BaseRectGraph& g, const Cover& c) {
  Coverage cov = build_coverage(g, c.rects);
  std::vector<Rect> rects = c.rects;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const std::vector<std::int32_t> u = unique_cells(cov, i);
    if (u.empty()) continue;  // nothing anchors the rectangle; pruning's job
    const Rect box = cells_bbox(g, u);
    if (box.top_left == rects[i].top_left && box.bottom_right == rects[i].bottom_right) continue;
    for (std::int32_t cell : cov.rect_cells[i]) --cov.counts[static_cast<std::size_t>(cell)];
    rects[i] = box;
    cov.rect_cells[i] = g.cells_in(box);
    for (std::int32_t cell : cov.rect_cells[i]) ++cov.counts[static_cast<std::size_t>(cell)];
  }
  return make_cover(std::move(rects), c.params);
}

Cover bb_split_cover(const BaseRectGraph& g, const Cover& c) {
  return split_pass(g, c, [&](const std::vector<std::int32_t>& u, const CostParams&,
                              std::vector<Rect>& frags) {
    for (const auto& group : cell_groups(g, u)) frags.push_back(cells_bbox(g, group));
    return true;
  });
}

Cover partition_split_cover(const BaseRectGraph& g, const Cover& c) {
  return split_pass(g, c, [&](const std::vector<std::int32_t>& u, const CostParams& params,
                              std::vector<Rect>& frags) {
    if (u.empty()) return true;
    std::vector<Rect> cells;
    cells.reserve(u.size());
    for (std::int32_t cell : u) cells.push_back(g.cells[static_cast<std::size_t>(cell)]);
    std::vector<Polygon> gaps;
    try {
      gaps = polygons_from_rects(cells);
    } catch (const ValidationError&) {
      return false;  // pinched gap region, not expressible as polygons
    }
    for (const Polygon& gap : gaps) {
      const Cover part = partition_cover(gap, params);
      frags.insert(frags.end(), part.rects.begin(), part.rects.end());
    }
    return true;
  });
}

Cover simple_join_cover(const BaseRectGraph& g, const Cover& c) {
  const CostScale scale = make_scale(c.params);

  // One directional pass: fold runs of rectangles sharing the banded sides.
  auto pass = [&](const std::vector<Rect>& rects, bool horizontal) {
    using Key = std::pair<Coord, Coord>;
    std::vector<Key> key_order;
    std::map<Key, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < rects.size(); ++i) {
      const Key k = horizontal ? Key{rects[i].top(), rects[i].bottom()}
                               : Key{rects[i].left(), rects[i].right()};
      if (buckets.find(k) == buckets.end()) key_order.push_back(k);
      buckets[k].push_back(i);
    }
    std::vector<std::pair<std::size_t, Rect>> placed;  // (first constituent index, rect)
    for (const Key& k : key_order) {
      std::vector<std::size_t>& ids = buckets[k];
      std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = horizontal ? std::tuple(rects[a].left(), rects[a].right(), a)
                                   : std::tuple(rects[a].bottom(), rects[a].top(), a);
        const auto kb = horizontal ? std::tuple(rects[b].left(), rects[b].right(), b)
                                   : std::tuple(rects[b].bottom(), rects[b].top(), b);
        return ka < kb;
      });
      std::size_t slot = ids[0];
      Rect acc = rects[ids[0]];
      for (std::size_t n = 1; n < ids.size(); ++n) {
        const Rect& next = rects[ids[n]];
        const Rect merged = rect_span(std::min(acc.left(), next.left()), std::max(acc.right(), next.right()),
                                      std::min(acc.bottom(), next.bottom()), std::max(acc.top(), next.top()));
        if (scost(scale, merged) < scost(scale, acc) + scost(scale, next) &&
            g.covered_area_in(merged) == merged.area()) {
          acc = merged;
        } else {
          placed.push_back({slot, acc});
          slot = ids[n];
          acc = next;
        }
      }
      placed.push_back({slot, acc});
    }
    std::sort(placed.begin(), placed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Rect> out;
    out.reserve(placed.size());
    for (auto& [slot, r] : placed) out.push_back(r);
    return out;
  };

  return make_cover(pass(pass(c.rects, true), false), c.params);
}

Cover full_join_cover(const BaseRectGraph& g, const Cover& c) {
  const CostScale scale = make_scale(c.params);
  std::vector<Rect> rects = c.rects;
  std::vector<char> alive(rects.size(), 1);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (!alive[i]) continue;
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      if (!alive[j]) continue;
      const Rect merged = rect_span(std::min(rects[i].left(), rects[j].left()),
                                    std::max(rects[i].right(), rects[j].right()),
                                    std::min(rects[i].bottom(), rects[j].bottom()),
                                    std::max(rects[i].top(), rects[j].top()));
      if (scost(scale, merged) >= scost(scale, rects[i]) + scost(scale, rects[j])) continue;
      if (g.covered_area_in(merged) != merged.area()) continue;
      rects[i] = merged;
      alive[j] = 0;
    }
  }
  std::vector<Rect> out;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    if (alive[i]) out.push_back(rects[i]);
  }
  return make_cover(std::move(out), c.params);
}

PipelineResult run_pipeline(const BaseRectGraph& g, Cover c, const std::vector<std::string>& stages) {
  PipelineResult out;
  for (const std::string& s : stages) {
    if (s == "prune") {
      c = prune_cover(g, c);
    } else if (s == "trim") {
      c = trim_cover(g, c);
    } else if (s == "bbsplit") {
      c = bb_split_cover(g, c);
    } else if (s == "parsplit") {
      c = partition_split_cover(g, c);
    } else if (s == "join") {
      c = simple_join_cover(g, c);
    } else if (s == "fulljoin") {
      c = full_join_cover(g, c);
    } else {
      throw ValidationError("unknown postprocessing stage: " + s);
    }
    out.stage_costs.push_back({s, c.total_cost});
  }
  out.cover = std::move(c);
  return out;
}

}  // namespace rectcover
