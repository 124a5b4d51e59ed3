#include "rectcover/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "rectcover/errors.hpp"
#include "rectcover/greedy.hpp"
#include "rectcover/partition.hpp"
#include "rectcover/postprocess.hpp"
#include "rectcover/strip.hpp"

namespace rectcover {

namespace {

const std::vector<std::pair<std::string, AlgorithmSpec>>& label_table() {
  static const std::vector<std::pair<std::string, AlgorithmSpec>> table = {
      {"par", {"par", {}}},
      {"par-j", {"par", {"join"}}},
      {"par-f", {"par", {"fulljoin"}}},
      {"strip", {"strip", {}}},
      {"strip-pt", {"strip", {"prune", "trim"}}},
      {"strip-ptb", {"strip", {"prune", "trim", "bbsplit"}}},
      {"strip-pts", {"strip", {"prune", "trim", "parsplit"}}},
      {"grdy", {"grdy", {}}},
      {"grdy-pt", {"grdy", {"prune", "trim"}}},
      {"exact", {"exact", {}}},
  };
  return table;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string format_time(double ms) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, ms);
  return std::string(buf, res.ptr);
}

}  // namespace

const std::vector<std::string>& algorithm_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& [label, spec] : label_table()) out.push_back(label);
    return out;
  }();
  return labels;
}

AlgorithmSpec parse_algorithm(const std::string& label) {
  for (const auto& [name, spec] : label_table()) {
    if (name == label) return spec;
  }
  const std::size_t plus = label.find('+');
  if (plus != std::string::npos) {
    AlgorithmSpec spec = parse_algorithm(label.substr(0, plus));
    for (const std::string& stage : split(label.substr(plus + 1), ',')) {
      if (!stage.empty()) spec.stages.push_back(stage);
    }
    return spec;
  }
  throw ValidationError("unknown algorithm label: " + label);
}

bool is_trivial(const Polygon& p) {
  return p.holes.empty() && p.outer.size() == 4;
}

RunResult run_config(const Polygon& p, const std::string& instance, int polygon_id,
                     const std::string& algorithm, const CostParams& params,
                     const RunOptions& opt) {
  AlgorithmSpec spec = parse_algorithm(algorithm);
  for (const std::string& stage : opt.extra_stages) spec.stages.push_back(stage);

  RunRecord rec;
  rec.instance = instance;
  rec.polygon_id = polygon_id;
  rec.n_vertices = vertex_count(p);
  rec.n_holes = p.holes.size();
  rec.algorithm = algorithm;
  rec.alpha = params.alpha;
  rec.beta = params.beta;

  if (is_trivial(p)) {
    Cover cover = make_cover({bounding_box(p)}, params);
    rec.n_base_rects = 1;
    rec.num_rects = cover.rects.size();
    rec.total_area = cover.total_area;
    rec.cost = cover.total_cost;
    rec.time_ms = 0.0;
    rec.status = "trivial";
    return {std::move(rec), std::move(cover)};
  }

  const BaseRectGraph g = build_graph(p);  // untimed: shared decomposition
  rec.n_base_rects = g.cells.size();

  using Clock = std::chrono::steady_clock;
  std::vector<double> times;
  std::optional<Cover> result;
  Clock::time_point started = Clock::now();
  try {
    for (int rep = 0; rep < std::max(1, opt.repeats); ++rep) {
      started = Clock::now();
      std::optional<Clock::time_point> deadline;
      if (opt.timeout_ms) deadline = started + std::chrono::milliseconds(*opt.timeout_ms);

      Cover c;
      if (spec.base == "par") {
        c = partition_cover(p, params);
      } else if (spec.base == "strip") {
        c = strip_cover(g, params);
      } else if (spec.base == "grdy") {
        c = greedy_cover(g, params, {opt.max_candidates, deadline});
      } else if (spec.base == "exact") {
        c = solve_exact(p, params, {opt.exact_cap, deadline});
      } else {
        throw ValidationError("unknown algorithm base: " + spec.base);
      }
      if (!spec.stages.empty()) c = run_pipeline(g, std::move(c), spec.stages).cover;

      const double ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
      if (opt.timeout_ms && ms > static_cast<double>(*opt.timeout_ms)) {
        throw TimeoutError("run exceeded the configured timeout");
      }
      times.push_back(ms);
      result = std::move(c);
    }
  } catch (const CapExceeded&) {
    rec.status = "cap_exceeded";
  } catch (const TimeoutError&) {
    rec.status = "timeout";
  }

  if (!result) {
    rec.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - started).count();
    return {std::move(rec), std::nullopt};
  }

  validate_cover(g, p, *result);
  std::sort(times.begin(), times.end());
  rec.time_ms = times[(times.size() - 1) / 2];
  rec.num_rects = result->rects.size();
  rec.total_area = result->total_area;
  rec.cost = result->total_cost;
  rec.status = "ok";
  return {std::move(rec), std::move(result)};
}

namespace {

constexpr const char* kCsvHeader =
    "instance,polygon_id,n_vertices,n_holes,n_base_rects,algorithm,alpha,beta,"
    "num_rects,total_area,cost,time_ms,status";

}  // namespace

std::string to_csv(const std::vector<RunRecord>& records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const RunRecord& r : records) {
    out += r.instance;
    out += ',';
    out += std::to_string(r.polygon_id);
    out += ',';
    out += std::to_string(r.n_vertices);
    out += ',';
    out += std::to_string(r.n_holes);
    out += ',';
    out += std::to_string(r.n_base_rects);
    out += ',';
    out += r.algorithm;
    out += ',';
    out += to_string(r.alpha);
    out += ',';
    out += to_string(r.beta);
    out += ',';
    if (r.num_rects) out += std::to_string(*r.num_rects);
    out += ',';
    if (r.total_area) out += std::to_string(*r.total_area);
    out += ',';
    if (r.cost) out += to_string(*r.cost);
    out += ',';
    out += format_time(r.time_ms);
    out += ',';
    out += r.status;
    out += '\n';
  }
  return out;
}

std::vector<RunRecord> parse_csv(const std::string& text) {
  std::vector<std::string> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kCsvHeader) {
    throw ParseError("missing or malformed record header", 0);
  }
  std::vector<RunRecord> out;
  std::size_t offset = lines.front().size() + 1;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::vector<std::string> f = split(lines[li], ',');
    if (f.size() != 13) throw ParseError("expected 13 record fields", offset);
    const auto integer = [&](const std::string& s) {
      std::int64_t v = 0;
      const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParseError("malformed integer field", offset);
      }
      return v;
    };
    RunRecord r;
    r.instance = f[0];
    r.polygon_id = static_cast<int>(integer(f[1]));
    r.n_vertices = static_cast<std::size_t>(integer(f[2]));
    r.n_holes = static_cast<std::size_t>(integer(f[3]));
    r.n_base_rects = static_cast<std::size_t>(integer(f[4]));
    r.algorithm = f[5];
    r.alpha = parse_rational(f[6]);
    r.beta = parse_rational(f[7]);
    if (!f[8].empty()) r.num_rects = static_cast<std::size_t>(integer(f[8]));
    if (!f[9].empty()) r.total_area = integer(f[9]);
    if (!f[10].empty()) r.cost = parse_rational(f[10]);
    {
      double v = 0;
      const auto res = std::from_chars(f[11].data(), f[11].data() + f[11].size(), v);
      if (res.ec != std::errc() || res.ptr != f[11].data() + f[11].size()) {
        throw ParseError("malformed time field", offset);
      }
      r.time_ms = v;
    }
    r.status = f[12];
    out.push_back(std::move(r));
    offset += lines[li].size() + 1;
  }
  return out;
}

void sort_records(std::vector<RunRecord>& records) {
  std::stable_sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) {
    if (a.instance != b.instance) return a.instance < b.instance;
    if (a.polygon_id != b.polygon_id) return a.polygon_id < b.polygon_id;
    if (a.algorithm != b.algorithm) return a.algorithm < b.algorithm;
    if (!(a.alpha == b.alpha)) return rational_less(a.alpha, b.alpha);
    return rational_less(a.beta, b.beta);
  });
}

std::string summarize_csv(const std::vector<RunRecord>& records) {
  // Group key: (instance, polygon_id, alpha, beta). Only completed rows enter.
  using GroupKey = std::tuple<std::string, int, std::string, std::string>;
  std::map<GroupKey, std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : records) {
    if (r.status != "ok" && r.status != "trivial") continue;
    if (!r.cost) continue;
    groups[{r.instance, r.polygon_id, to_string(r.alpha), to_string(r.beta)}].push_back(&r);
  }

  struct Acc {
    double rel_cost = 0;
    double rel_time = 0;
    std::size_t n = 0;
    Rational alpha;
  };
  std::map<std::pair<std::string, std::string>, Acc> by_algorithm;  // (algorithm, alpha text)
  for (const auto& [key, rows] : groups) {
    Rational best_cost = *rows.front()->cost;
    double best_time = rows.front()->time_ms;
    for (const RunRecord* r : rows) {
      if (rational_less(*r->cost, best_cost)) best_cost = *r->cost;
      best_time = std::min(best_time, r->time_ms);
    }
    const double base_cost = to_double(best_cost);
    for (const RunRecord* r : rows) {
      Acc& acc = by_algorithm[{r->algorithm, to_string(r->alpha)}];
      acc.rel_cost += base_cost > 0 ? to_double(*r->cost) / base_cost : 1.0;
      acc.rel_time += best_time > 0 ? r->time_ms / best_time : 1.0;
      acc.n += 1;
      acc.alpha = r->alpha;
    }
  }

  std::vector<std::pair<std::pair<std::string, std::string>, Acc>> rows(by_algorithm.begin(),
                                                                        by_algorithm.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return rational_less(a.second.alpha, b.second.alpha);
  });

  std::string out = "algorithm,alpha,mean_rel_cost,mean_rel_time,groups\n";
  for (const auto& [key, acc] : rows) {
    out += key.first;
    out += ',';
    out += key.second;
    out += ',';
    out += format_time(acc.rel_cost / static_cast<double>(acc.n));
    out += ',';
    out += format_time(acc.rel_time / static_cast<double>(acc.n));
    out += ',';
    out += std::to_string(acc.n);
    out += '\n';
  }
  return out;
}

}  // namespace rectcover
