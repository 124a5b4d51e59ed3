#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rectcover/cover.hpp"
#include "rectcover/decompose.hpp"
#include "rectcover/exact.hpp"
#include "rectcover/rational.hpp"

namespace rectcover {

// One benchmark measurement. Result fields are empty on failure rows.
struct RunRecord {
  std::string instance;
  int polygon_id = 0;
  std::size_t n_vertices = 0;
  std::size_t n_holes = 0;
  std::size_t n_base_rects = 0;
  std::string algorithm;
  Rational alpha;
  Rational beta;
  std::optional<std::size_t> num_rects;
  std::optional<Coord> total_area;
  std::optional<Rational> cost;
  double time_ms = 0.0;
  std::string status;  // ok | trivial | cap_exceeded | timeout
};

struct AlgorithmSpec {
  std::string base;                 // par | strip | grdy | exact
  std::vector<std::string> stages;  // postprocessor pipeline, applied in order
};

// The fixed label vocabulary: par, par-j, par-f, strip, strip-pt, strip-ptb,
// strip-pts, grdy, grdy-pt, exact.
const std::vector<std::string>& algorithm_labels();

// Resolves a fixed label, or "<base>+<stage,stage,...>" for custom pipelines.
// Throws ValidationError on unknown labels.
AlgorithmSpec parse_algorithm(const std::string& label);

struct RunOptions {
  int repeats = 1;
  std::optional<std::int64_t> timeout_ms;  // per-run wall clock budget
  std::int64_t max_candidates = kDefaultCandidateCap;
  std::int64_t exact_cap = kDefaultExactCap;
  std::vector<std::string> extra_stages;  // appended after the label's stages
};

struct RunResult {
  RunRecord record;
  std::optional<Cover> cover;  // present for ok and trivial rows
};

// Runs one (polygon, algorithm, cost) configuration. Hole-free rectangles
// short-circuit to their singleton cover (status trivial). Timing covers the
// algorithm plus its pipeline, median over repeats; decomposition is excluded.
// The cover is validated before the record is produced.
RunResult run_config(const Polygon& p, const std::string& instance, int polygon_id,
                     const std::string& algorithm, const CostParams& params,
                     const RunOptions& opt);

// True for a hole-free rectangle, which every algorithm covers with one rect.
bool is_trivial(const Polygon& p);

std::string to_csv(const std::vector<RunRecord>& records);
// Strict inverse of to_csv; throws ParseError on malformed input.
std::vector<RunRecord> parse_csv(const std::string& text);

// Deterministic output order: (instance, polygon_id, algorithm, alpha).
void sort_records(std::vector<RunRecord>& records);

// Aggregates ok/trivial rows: per (instance, polygon_id, alpha) group, each
// algorithm's cost and time are divided by the group's best; the output CSV
// reports mean ratios per (algorithm, alpha) plus the group count.
std::string summarize_csv(const std::vector<RunRecord>& records);

}  // namespace rectcover
