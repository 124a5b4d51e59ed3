#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rectcover/bench.hpp"
#include "rectcover/errors.hpp"
#include "rectcover/exact.hpp"
#include "rectcover/random_polygon.hpp"
#include "rectcover/svg.hpp"
#include "rectcover/wkt.hpp"

namespace fs = std::filesystem;
using namespace rectcover;

namespace {

struct Instance {
  std::string name;  // file stem
  std::vector<Polygon> polygons;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
}

std::vector<Instance> load_instances(const std::string& input) {
  const fs::path path(input);
  std::vector<fs::path> files;
  if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".wkt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ValidationError("no .wkt files in " + input);
  } else if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw ValidationError("input not found: " + input);
  }
  std::vector<Instance> out;
  for (const fs::path& f : files) {
    out.push_back({f.stem().string(), parse_wkt(read_file(f))});
  }
  return out;
}

// Rationals in file names: the fraction slash becomes 'd'.
std::string path_token(const Rational& r) {
  std::string s = to_string(r);
  for (char& c : s) {
    if (c == '/') c = 'd';
  }
  return s;
}

void emit_csv(const std::vector<RunRecord>& records, const std::string& out_csv) {
  std::vector<RunRecord> sorted = records;
  sort_records(sorted);
  const std::string text = to_csv(sorted);
  if (out_csv.empty()) {
    std::cout << text;
  } else {
    write_file(out_csv, text);
  }
}

void dump_rects(const std::string& instance, int pid, const char* kind,
                const std::vector<Rect>& rects) {
  std::cerr << "# " << instance << " p" << pid << " " << kind << " x1,y1,x2,y2\n";
  for (const Rect& r : rects) {
    std::cerr << r.top_left.x << ',' << r.top_left.y << ',' << r.bottom_right.x << ','
              << r.bottom_right.y << '\n';
  }
}

struct SolveArgs {
  std::string input;
  std::string alg = "par";
  std::string alpha = "1";
  std::string beta = "1";
  std::string post;
  int repeats = 1;
  std::int64_t timeout_ms = 0;
  std::string out_csv;
  std::string out_svg;
  std::string emit_lp_dir;
  std::int64_t max_candidates = kDefaultCandidateCap;
  std::int64_t exact_cap = kDefaultExactCap;
  std::uint64_t seed = 0;
  bool decomp_time = false;
  bool dump_base = false;
  bool dump_powerset = false;
};

int run_solve(const SolveArgs& a) {
  const CostParams params = make_cost_params(parse_rational(a.alpha), parse_rational(a.beta));
  RunOptions opt;
  opt.repeats = a.repeats;
  if (a.timeout_ms > 0) opt.timeout_ms = a.timeout_ms;
  opt.max_candidates = a.max_candidates;
  opt.exact_cap = a.exact_cap;
  if (!a.post.empty()) {
    for (const std::string& stage : [](std::string s) {
           std::vector<std::string> parts;
           std::stringstream ss(std::move(s));
           for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
           return parts;
         }(a.post)) {
      if (!stage.empty()) opt.extra_stages.push_back(stage);
    }
  }

  std::vector<RunRecord> records;
  for (const Instance& inst : load_instances(a.input)) {
    for (std::size_t pid = 0; pid < inst.polygons.size(); ++pid) {
      const Polygon& p = inst.polygons[pid];
      const int id = static_cast<int>(pid);

      if (a.decomp_time || a.dump_base || a.dump_powerset) {
        const auto t0 = std::chrono::steady_clock::now();
        const BaseRectGraph g = build_graph(p);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        if (a.decomp_time) {
          std::cerr << "decomposition " << inst.name << " p" << id << " " << g.cells.size()
                    << " cells " << ms << " ms\n";
        }
        if (a.dump_base) dump_rects(inst.name, id, "base", g.cells);
        if (a.dump_powerset) {
          dump_rects(inst.name, id, "powerset", enumerate_powerset_rects(g, a.max_candidates));
        }
      }

      RunResult res = run_config(p, inst.name, id, a.alg, params, opt);
      if (res.cover && !a.out_svg.empty()) {
        const fs::path file = fs::path(a.out_svg) /
                              (inst.name + "_p" + std::to_string(id) + "_" + a.alg + "_a" +
                               path_token(params.alpha) + "_b" + path_token(params.beta) + ".svg");
        write_file(file, serialize_svg(p, res.cover->rects));
      }
      if (!a.emit_lp_dir.empty()) {
        for (const LpVariant variant : {LpVariant::weighted, LpVariant::unweighted}) {
          const char* tag = variant == LpVariant::weighted ? "weighted" : "unweighted";
          std::ostringstream lp;
          emit_lp(lp, p, params, variant, a.max_candidates);
          write_file(fs::path(a.emit_lp_dir) /
                         (inst.name + "_p" + std::to_string(id) + "_" + tag + ".lp"),
                     lp.str());
        }
      }
      records.push_back(std::move(res.record));
    }
  }
  emit_csv(records, a.out_csv);
  return 0;
}

struct BenchArgs {
  std::string input;
  std::string algs;
  int repeats = 1;
  std::int64_t timeout_ms = 0;
  std::string out_csv;
  std::string summary;
  std::int64_t max_candidates = kDefaultCandidateCap;
  std::int64_t exact_cap = kDefaultExactCap;
};

int run_bench(const BenchArgs& a) {
  std::vector<std::string> labels;
  if (a.algs.empty()) {
    labels = algorithm_labels();
  } else {
    std::stringstream ss(a.algs);
    for (std::string item; std::getline(ss, item, ';');) {
      if (!item.empty()) labels.push_back(item);
    }
  }
  for (const std::string& label : labels) parse_algorithm(label);  // fail fast

  RunOptions opt;
  opt.repeats = a.repeats;
  if (a.timeout_ms > 0) opt.timeout_ms = a.timeout_ms;
  opt.max_candidates = a.max_candidates;
  opt.exact_cap = a.exact_cap;

  const std::vector<std::int64_t> alphas = {1, 10, 50, 100, 500, 1000};
  std::vector<RunRecord> records;
  for (const Instance& inst : load_instances(a.input)) {
    for (std::size_t pid = 0; pid < inst.polygons.size(); ++pid) {
      for (const std::int64_t alpha : alphas) {
        const CostParams params = make_cost_params(make_rational(alpha), make_rational(1));
        for (const std::string& label : labels) {
          records.push_back(
              run_config(inst.polygons[pid], inst.name, static_cast<int>(pid), label, params, opt)
                  .record);
        }
      }
    }
  }
  emit_csv(records, a.out_csv);
  if (!a.summary.empty()) {
    std::vector<RunRecord> sorted = records;
    sort_records(sorted);
    write_file(a.summary, summarize_csv(sorted));
  }
  return 0;
}

struct GenArgs {
  std::string kind = "union";
  std::uint64_t seed = 1;
  int count = 1;
  std::size_t vertices = 100;
  std::string out;
};

int run_gen(const GenArgs& a) {
  std::string text;
  if (a.kind == "union") {
    for (int i = 0; i < a.count; ++i) {
      text += to_wkt(random_rect_union_polygon(a.seed + static_cast<std::uint64_t>(i)));
      text += '\n';
    }
  } else if (a.kind == "staircase") {
    for (int i = 0; i < a.count; ++i) {
      text += to_wkt(random_staircase(a.vertices, a.seed + static_cast<std::uint64_t>(i)));
      text += '\n';
    }
  } else {
    throw ValidationError("unknown generator kind: " + a.kind);
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cost rectangle covers of rectilinear polygons"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Cover polygons with one algorithm");
  solve->add_option("--input", solve_args.input, "WKT file or directory of .wkt files")
      ->required();
  solve->add_option("--alg", solve_args.alg,
                    "Algorithm label (par, par-j, par-f, strip, strip-pt, strip-ptb, strip-pts, "
                    "grdy, grdy-pt, exact, or base+stage,stage)");
  solve->add_option("--alpha", solve_args.alpha, "Per-rectangle cost (integer, fraction, decimal)");
  solve->add_option("--beta", solve_args.beta, "Per-area cost");
  solve->add_option("--post", solve_args.post,
                    "Extra postprocessor stages, comma separated (prune, trim, bbsplit, parsplit, "
                    "join, fulljoin)");
  solve->add_option("--repeats", solve_args.repeats, "Timing repeats; the median is reported");
  solve->add_option("--timeout-ms", solve_args.timeout_ms, "Per-polygon time budget");
  solve->add_option("--out-csv", solve_args.out_csv, "Write records CSV here (default stdout)");
  solve->add_option("--out-svg", solve_args.out_svg, "Directory for cover drawings");
  solve->add_option("--emit-lp", solve_args.emit_lp_dir,
                    "Directory for LP files (weighted and unweighted per polygon)");
  solve->add_option("--max-candidates", solve_args.max_candidates,
                    "Cap on enumerated candidate rectangles");
  solve->add_option("--exact-cap", solve_args.exact_cap,
                    "Candidate cap for the exact solver");
  solve->add_option("--seed", solve_args.seed, "Reserved for randomized configurations");
  solve->add_flag("--decomp-time", solve_args.decomp_time,
                  "Report decomposition time on stderr (excluded from timings)");
  solve->add_flag("--dump-base", solve_args.dump_base, "Dump base rectangles to stderr");
  solve->add_flag("--dump-powerset", solve_args.dump_powerset,
                  "Dump powerset rectangles to stderr");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Sweep all algorithms over alpha in {1,10,50,100,500,1000} with beta = 1");
  bench->add_option("--input", bench_args.input, "WKT file or directory")->required();
  bench->add_option("--algs", bench_args.algs, "Semicolon-separated labels (default: all)");
  bench->add_option("--repeats", bench_args.repeats, "Timing repeats per configuration");
  bench->add_option("--timeout-ms", bench_args.timeout_ms, "Per-polygon time budget");
  bench->add_option("--out-csv", bench_args.out_csv, "Write records CSV here (default stdout)");
  bench->add_option("--summary", bench_args.summary, "Also write a per-algorithm summary CSV");
  bench->add_option("--max-candidates", bench_args.max_candidates,
                    "Cap on enumerated candidate rectangles");
  bench->add_option("--exact-cap", bench_args.exact_cap, "Candidate cap for the exact solver");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate random test polygons as WKT");
  gen->add_option("--kind", gen_args.kind, "union | staircase");
  gen->add_option("--seed", gen_args.seed, "Base seed; polygon i uses seed + i");
  gen->add_option("--count", gen_args.count, "Number of polygons");
  gen->add_option("--vertices", gen_args.vertices, "Vertex count for staircase polygons");
  gen->add_option("--out", gen_args.out, "Output file (default stdout)");

  std::string summarize_input, summarize_out;
  CLI::App* summ = app.add_subcommand("summarize", "Aggregate a records CSV");
  summ->add_option("--input", summarize_input, "Records CSV produced by solve or bench")
      ->required();
  summ->add_option("--out", summarize_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (summ->parsed()) {
      const std::string text = summarize_csv(parse_csv(read_file(summarize_input)));
      if (summarize_out.empty()) {
        std::cout << text;
      } else {
        write_file(summarize_out, text);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
