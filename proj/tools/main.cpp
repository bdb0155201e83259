// Command line front end; talks to the library through the C API only.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "congruence.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr double kLowerBoundSlack = 1e-6;

struct SeriesPtr {
  cgd_series* ptr = nullptr;
  SeriesPtr() = default;
  explicit SeriesPtr(cgd_series* p) : ptr(p) {}
  SeriesPtr(SeriesPtr&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
  SeriesPtr& operator=(SeriesPtr&& other) noexcept {
    if (this != &other) {
      cgd_series_free(ptr);
      ptr = other.ptr;
      other.ptr = nullptr;
    }
    return *this;
  }
  SeriesPtr(const SeriesPtr&) = delete;
  SeriesPtr& operator=(const SeriesPtr&) = delete;
  ~SeriesPtr() { cgd_series_free(ptr); }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_ok(cgd_status status) {
  if (status != CGD_OK) throw UsageError(cgd_last_error());
}

cgd_format parse_format(const std::string& name) {
  if (name == "csv-single") return CGD_FORMAT_CSV_SINGLE;
  if (name == "jsonl-collection") return CGD_FORMAT_JSONL_COLLECTION;
  throw UsageError("unknown format '" + name + "'");
}

SeriesPtr load(const std::string& path, cgd_format format) {
  cgd_series* raw = nullptr;
  require_ok(cgd_series_load(path.c_str(), format, &raw));
  return SeriesPtr(raw);
}

SeriesPtr dewarp(const SeriesPtr& s, int m) {
  cgd_series* raw = nullptr;
  require_ok(cgd_arc_length_resample(s.ptr, m, &raw));
  return SeriesPtr(raw);
}

SeriesPtr walk(int k, int n, double step_scale, int smooth, std::uint64_t seed) {
  cgd_series* raw = nullptr;
  require_ok(cgd_generate_walk(k, n, step_scale, smooth, seed, &raw));
  return SeriesPtr(raw);
}

double distance(cgd_measure measure, const SeriesPtr& s, const SeriesPtr& t) {
  double value = 0.0;
  require_ok(cgd_distance(measure, s.ptr, t.ptr, &value));
  return value;
}

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// Best of `reps` repetitions on a monotonic clock; never reports zero.
template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < reps; ++r) {
    const double start = now_seconds();
    fn();
    best = std::min(best, now_seconds() - start);
  }
  return std::max(best, 1e-9);
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot open output file: " + path);
  return file;
}

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

std::string fmt_sci(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

double median(std::vector<double> values) {
  const size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<ptrdiff_t>(mid),
                   values.end());
  return values[mid];
}

double mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

struct BenchRecord {
  std::string pair_id;
  int k = 0;
  int n = 0;
  double d_opt = 0.0;
  double d_delta = 0.0;
  double d_fast_delta = 0.0;
  double d_greedy = 0.0;
  double d_fast_greedy = 0.0;
  double t_opt = 0.0;
  double t_delta = 0.0;
  double t_fast_delta = 0.0;
  double t_greedy = 0.0;
  double t_fast_greedy = 0.0;
  bool converged = false;

  bool lower_bound_violated() const {
    if (!converged) return false;
    const double cap = d_opt + kLowerBoundSlack;
    return d_delta > cap || d_fast_delta > cap || d_greedy > cap ||
           d_fast_greedy > cap;
  }
};

struct PairSource {
  // Either generated walks or entries drawn from a dataset.
  std::vector<std::pair<SeriesPtr, SeriesPtr>> pairs;
  std::vector<std::string> ids;
};

SeriesPtr dataset_series(const cgd_dataset* ds, int index) {
  cgd_series* raw = nullptr;
  require_ok(cgd_dataset_get(ds, index, nullptr, nullptr, &raw));
  return SeriesPtr(raw);
}

PairSource make_pairs(const std::string& input, cgd_format format, int k, int n,
                      int trials, std::uint64_t seed) {
  PairSource out;
  if (!input.empty()) {
    cgd_dataset* raw = nullptr;
    require_ok(cgd_dataset_load(input.c_str(), format, &raw));
    std::unique_ptr<cgd_dataset, decltype(&cgd_dataset_free)> ds(raw, &cgd_dataset_free);
    const int size = cgd_dataset_size(ds.get());
    if (size < 2) throw UsageError("dataset must contain at least two series");
    for (int t = 0; t < trials; ++t) {
      const int a = static_cast<int>((seed + 2654435761ULL * t) % size);
      int b = static_cast<int>((seed + 40503ULL * (t + 1)) % size);
      if (b == a) b = (b + 1) % size;
      SeriesPtr sa = dataset_series(ds.get(), a);
      SeriesPtr sb = dataset_series(ds.get(), b);
      // Dewarp to a common length so the approximations apply.
      const int m = std::min(cgd_series_length(sa.ptr), cgd_series_length(sb.ptr));
      out.pairs.emplace_back(dewarp(sa, std::max(2, m)), dewarp(sb, std::max(2, m)));
      out.ids.push_back("ds-" + std::to_string(a) + "-" + std::to_string(b));
    }
  } else {
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t sa = seed + 2ULL * t;
      const std::uint64_t sb = seed + 2ULL * t + 1;
      out.pairs.emplace_back(walk(k, n, 1.0, 3, sa), walk(k, n, 1.0, 3, sb));
      out.ids.push_back("walk-" + std::to_string(k) + "d-" + std::to_string(t));
    }
  }
  return out;
}

cgd_opt_config make_config(int multistart, int max_iter, std::uint64_t seed) {
  cgd_opt_config cfg;
  cgd_opt_config_default(&cfg);
  if (multistart > 0) cfg.multistart_count = multistart;
  if (max_iter > 0) cfg.max_iterations = max_iter;
  cfg.seed = seed;
  return cfg;
}

// ---- subcommands ----

int run_dist(const std::string& path_a, const std::string& path_b,
             const std::string& measure, const std::string& format_name,
             bool apply_dewarp, int multistart, int max_iter, std::uint64_t seed) {
  const cgd_format format = parse_format(format_name);
  SeriesPtr a = load(path_a, format);
  SeriesPtr b = load(path_b, format);
  if (apply_dewarp) {
    a = dewarp(a, cgd_series_length(a.ptr));
    b = dewarp(b, cgd_series_length(b.ptr));
  }

  const std::vector<std::pair<std::string, cgd_measure>> measures = {
      {"dtw", CGD_MEASURE_DTW},
      {"delta", CGD_MEASURE_DELTA},
      {"fast-delta", CGD_MEASURE_FAST_DELTA},
      {"greedy", CGD_MEASURE_GREEDY},
      {"fast-greedy", CGD_MEASURE_FAST_GREEDY},
  };

  if (measure == "all") {
    for (const auto& [name, m] : measures) {
      std::cout << name << " " << fmt(distance(m, a, b)) << "\n";
    }
    return kExitOk;
  }
  if (measure == "opt") {
    const cgd_opt_config cfg = make_config(multistart, max_iter, seed);
    cgd_opt_result result;
    require_ok(cgd_congruence_upper(a.ptr, b.ptr, &cfg, &result));
    std::cout << fmt(result.value) << "\n";
    return kExitOk;
  }
  for (const auto& [name, m] : measures) {
    if (name == measure) {
      std::cout << fmt(distance(m, a, b)) << "\n";
      return kExitOk;
    }
  }
  throw UsageError("unknown measure '" + measure + "'");
}

int run_gen(int k, int n, int count, double step_scale, int smooth,
            std::uint64_t seed, const std::string& output,
            const std::string& format_name) {
  const cgd_format format = parse_format(format_name);
  if (format == CGD_FORMAT_CSV_SINGLE && count != 1) {
    throw UsageError("csv-single output supports exactly one series (--count 1)");
  }
  cgd_dataset* raw = nullptr;
  require_ok(cgd_dataset_create(&raw));
  std::unique_ptr<cgd_dataset, decltype(&cgd_dataset_free)> ds(raw, &cgd_dataset_free);
  for (int i = 0; i < count; ++i) {
    SeriesPtr s = walk(k, n, step_scale, smooth, seed + static_cast<std::uint64_t>(i));
    char id[32];
    std::snprintf(id, sizeof(id), "walk-%03d", i);
    require_ok(cgd_dataset_add(ds.get(), id, nullptr, s.ptr));
  }
  require_ok(cgd_dataset_save(ds.get(), output.c_str(), format));
  return kExitOk;
}

int run_dewarp(const std::string& input, const std::string& output, int m,
               const std::string& format_name, const std::string& id) {
  const cgd_format format = parse_format(format_name);
  SeriesPtr s = load(input, format);
  const int target = m > 0 ? m : cgd_series_length(s.ptr);
  SeriesPtr out = dewarp(s, target);
  require_ok(cgd_series_save(out.ptr, output.c_str(), format, id.c_str()));
  return kExitOk;
}

int run_sanity(const std::vector<int>& dims, int n, int trials, int multistart,
               int max_iter, std::uint64_t seed, const std::string& output) {
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "# schema=1\n";
  out << "pair_id,k,n,value,seconds,converged,filtered\n";

  int failures = 0;
  for (int k : dims) {
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t s = seed + 1000ULL * k + static_cast<std::uint64_t>(trial);
      SeriesPtr base = walk(k, n, 1.0, 3, s);
      cgd_series* transformed_raw = nullptr;
      require_ok(cgd_random_transform(base.ptr, s + 1, 0.5, &transformed_raw));
      SeriesPtr transformed(transformed_raw);

      const cgd_opt_config cfg = make_config(multistart, max_iter, s);
      cgd_opt_result result;
      const double start = now_seconds();
      require_ok(cgd_congruence_upper(transformed.ptr, base.ptr, &cfg, &result));
      const double seconds = std::max(now_seconds() - start, 1e-9);

      const bool filtered = result.value > 100.0;  // optimizer failed outright
      if (filtered) ++failures;
      out << "sanity-" << k << "d-" << trial << "," << k << "," << n << ","
          << fmt_sci(result.value) << "," << fmt_sci(seconds) << ","
          << (result.converged ? 1 : 0) << "," << (filtered ? 1 : 0) << "\n";
    }
  }
  std::cerr << "sanity: " << failures << " of " << trials * dims.size()
            << " runs filtered (value > 100)\n";
  return kExitOk;
}

BenchRecord evaluate_pair(const std::string& id, const SeriesPtr& a, const SeriesPtr& b,
                          const cgd_opt_config& cfg, bool timed, int reps) {
  BenchRecord rec;
  rec.pair_id = id;
  rec.k = cgd_series_dim(a.ptr);
  rec.n = cgd_series_length(a.ptr);

  cgd_opt_result opt;
  if (timed) {
    rec.t_opt = time_best_of(reps, [&] {
      require_ok(cgd_congruence_upper(a.ptr, b.ptr, &cfg, &opt));
    });
    rec.t_delta = time_best_of(reps, [&] { rec.d_delta = distance(CGD_MEASURE_DELTA, a, b); });
    rec.t_fast_delta =
        time_best_of(reps, [&] { rec.d_fast_delta = distance(CGD_MEASURE_FAST_DELTA, a, b); });
    rec.t_greedy =
        time_best_of(reps, [&] { rec.d_greedy = distance(CGD_MEASURE_GREEDY, a, b); });
    rec.t_fast_greedy = time_best_of(
        reps, [&] { rec.d_fast_greedy = distance(CGD_MEASURE_FAST_GREEDY, a, b); });
  } else {
    const double t0 = now_seconds();
    require_ok(cgd_congruence_upper(a.ptr, b.ptr, &cfg, &opt));
    rec.t_opt = std::max(now_seconds() - t0, 1e-9);
    const double t1 = now_seconds();
    rec.d_delta = distance(CGD_MEASURE_DELTA, a, b);
    rec.t_delta = std::max(now_seconds() - t1, 1e-9);
    const double t2 = now_seconds();
    rec.d_fast_delta = distance(CGD_MEASURE_FAST_DELTA, a, b);
    rec.t_fast_delta = std::max(now_seconds() - t2, 1e-9);
    const double t3 = now_seconds();
    rec.d_greedy = distance(CGD_MEASURE_GREEDY, a, b);
    rec.t_greedy = std::max(now_seconds() - t3, 1e-9);
    const double t4 = now_seconds();
    rec.d_fast_greedy = distance(CGD_MEASURE_FAST_GREEDY, a, b);
    rec.t_fast_greedy = std::max(now_seconds() - t4, 1e-9);
  }
  rec.d_opt = opt.value;
  rec.converged = opt.converged != 0;
  return rec;
}

void write_record_prefix(std::ostream& out, const BenchRecord& r) {
  out << r.pair_id << "," << r.k << "," << r.n << "," << fmt_sci(r.d_opt) << ","
      << fmt_sci(r.d_delta) << "," << fmt_sci(r.d_fast_delta) << ","
      << fmt_sci(r.d_greedy) << "," << fmt_sci(r.d_fast_greedy) << ","
      << fmt_sci(r.t_opt) << "," << fmt_sci(r.t_delta) << ","
      << fmt_sci(r.t_fast_delta) << "," << fmt_sci(r.t_greedy) << ","
      << fmt_sci(r.t_fast_greedy) << "," << (r.converged ? 1 : 0);
}

int run_bench_tightness(const std::string& input, const std::string& format_name,
                        const std::vector<int>& dims, const std::vector<int>& lengths,
                        int trials, int multistart, int max_iter, std::uint64_t seed,
                        const std::string& output) {
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "# schema=1\n";
  out << "pair_id,k,n,d_opt,d_delta,d_fast_delta,d_greedy,d_fast_greedy,"
         "t_opt,t_delta,t_fast_delta,t_greedy,t_fast_greedy,converged,"
         "r_delta,r_fast_delta,r_greedy,r_fast_greedy\n";

  bool violation = false;
  std::vector<double> greedy_ratios;
  std::vector<double> delta_ratios;

  auto run_cell = [&](const PairSource& source, int k, std::uint64_t cell_seed) {
    const cgd_opt_config cfg = make_config(multistart, max_iter, cell_seed);
    // Distance values for independent pairs are computed in parallel; the
    // wall-clock columns of this report are informational only.
    std::vector<std::future<BenchRecord>> futures;
    for (size_t i = 0; i < source.pairs.size(); ++i) {
      futures.push_back(std::async(std::launch::async, [&, i] {
        return evaluate_pair(source.ids[i], source.pairs[i].first,
                             source.pairs[i].second, cfg, false, 1);
      }));
    }
    for (auto& future : futures) {
      const BenchRecord rec = future.get();
      if (rec.lower_bound_violated()) violation = true;
      write_record_prefix(out, rec);
      for (double d : {rec.d_delta, rec.d_fast_delta, rec.d_greedy, rec.d_fast_greedy}) {
        out << ",";
        if (rec.d_opt > 0.0) out << fmt_sci(d / rec.d_opt);
        // d_opt == 0: ratio undefined, field left empty
      }
      out << "\n";
      if (rec.d_opt > 0.0) {
        delta_ratios.push_back(rec.d_delta / rec.d_opt);
        greedy_ratios.push_back(rec.d_greedy / rec.d_opt);
      }
    }
    (void)k;
  };

  if (!input.empty()) {
    const PairSource source =
        make_pairs(input, parse_format(format_name), 0, 0, trials, seed);
    run_cell(source, 0, seed);
  } else {
    for (int k : dims) {
      for (int n : lengths) {
        const std::uint64_t cell_seed = seed + 100000ULL * k + 100ULL * n;
        run_cell(make_pairs("", CGD_FORMAT_CSV_SINGLE, k, n, trials, cell_seed), k,
                 cell_seed);
      }
    }
  }

  std::cerr << "tightness summary: mean delta ratio " << mean(delta_ratios)
            << ", mean greedy ratio " << mean(greedy_ratios) << "\n";
  if (!greedy_ratios.empty() && mean(greedy_ratios) < mean(delta_ratios)) {
    // Expected ordering (greedy tightest) is a soft expectation, logged only.
    std::cerr << "note: greedy ratio below delta ratio on this sample\n";
  }
  if (violation) {
    std::cerr << "error: lower-bound violation detected (approximation > d_opt + "
              << kLowerBoundSlack << " with converged optimizer)\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_bench_speedup(const std::string& input, const std::string& format_name,
                      const std::vector<int>& dims, const std::vector<int>& lengths,
                      int trials, int multistart, int max_iter, std::uint64_t seed,
                      const std::string& output) {
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "# schema=1\n";
  out << "pair_id,k,n,d_opt,d_delta,d_fast_delta,d_greedy,d_fast_greedy,"
         "t_opt,t_delta,t_fast_delta,t_greedy,t_fast_greedy,converged,"
         "s_delta,s_fast_delta,s_greedy,s_fast_greedy\n";

  bool violation = false;
  std::map<std::string, std::vector<double>> speedups;

  auto run_cell = [&](const PairSource& source, std::uint64_t cell_seed) {
    const cgd_opt_config cfg = make_config(multistart, max_iter, cell_seed);
    // Timing is taken one measurement at a time.
    for (size_t i = 0; i < source.pairs.size(); ++i) {
      const BenchRecord rec = evaluate_pair(source.ids[i], source.pairs[i].first,
                                            source.pairs[i].second, cfg, true, 3);
      if (rec.lower_bound_violated()) violation = true;
      write_record_prefix(out, rec);
      const std::pair<const char*, double> ratios[] = {
          {"delta", rec.t_opt / rec.t_delta},
          {"fast_delta", rec.t_opt / rec.t_fast_delta},
          {"greedy", rec.t_opt / rec.t_greedy},
          {"fast_greedy", rec.t_opt / rec.t_fast_greedy},
      };
      for (const auto& [name, ratio] : ratios) {
        out << "," << fmt_sci(ratio);
        speedups[name].push_back(ratio);
      }
      out << "\n";
    }
  };

  if (!input.empty()) {
    run_cell(make_pairs(input, parse_format(format_name), 0, 0, trials, seed), seed);
  } else {
    for (int k : dims) {
      for (int n : lengths) {
        const std::uint64_t cell_seed = seed + 100000ULL * k + 100ULL * n;
        run_cell(make_pairs("", CGD_FORMAT_CSV_SINGLE, k, n, trials, cell_seed),
                 cell_seed);
      }
    }
  }

  for (auto& [name, values] : speedups) {
    std::cerr << "speedup summary: median " << name << " " << median(values) << "\n";
  }
  if (speedups.count("fast_delta") && speedups.count("delta") &&
      median(speedups["fast_delta"]) < median(speedups["delta"])) {
    std::cerr << "note: fast delta not fastest on this sample\n";
  }
  if (violation) {
    std::cerr << "error: lower-bound violation detected\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence distance toolkit: distances, data generation, and "
               "benchmark reports"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  std::string output;
  std::string format_name = "csv-single";
  int multistart = 0;
  int max_iter = 0;

  // dist
  auto* dist = app.add_subcommand("dist", "Distance between two series files");
  std::string dist_a, dist_b, dist_measure = "all";
  bool dist_dewarp = false;
  dist->add_option("series_a", dist_a)->required();
  dist->add_option("series_b", dist_b)->required();
  dist->add_option("--measure", dist_measure,
                   "dtw|delta|fast-delta|greedy|fast-greedy|opt|all");
  dist->add_option("--format", format_name, "csv-single|jsonl-collection");
  dist->add_flag("--dewarp", dist_dewarp, "arc-length resample before measuring");
  dist->add_option("--seed", seed);
  dist->add_option("--multistart", multistart);
  dist->add_option("--max-iter", max_iter);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic random-walk series");
  int gen_k = 2, gen_n = 32, gen_count = 1, gen_smooth = 3;
  double gen_step = 1.0;
  gen->add_option("--k", gen_k, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("--n", gen_n, "length")->check(CLI::Range(2, 1 << 24));
  gen->add_option("--count", gen_count)->check(CLI::PositiveNumber);
  gen->add_option("--step-scale", gen_step);
  gen->add_option("--smooth", gen_smooth)->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("--output", output)->required();
  gen->add_option("--format", format_name);

  // dewarp
  auto* dw = app.add_subcommand("dewarp", "Arc-length resample a series file");
  std::string dw_input, dw_id = "dewarped";
  int dw_m = 0;
  dw->add_option("input", dw_input)->required();
  dw->add_option("--m", dw_m, "target length (default: input length)");
  dw->add_option("--output", output)->required();
  dw->add_option("--format", format_name);
  dw->add_option("--id", dw_id);

  // sanity
  auto* sanity = app.add_subcommand(
      "sanity", "Optimizer check on congruent pairs (CSV report)");
  std::vector<int> sanity_k = {1, 2, 3};
  int sanity_n = 16, sanity_trials = 20;
  sanity->add_option("--k", sanity_k, "dimensions to test");
  sanity->add_option("--n", sanity_n)->check(CLI::Range(2, 1 << 20));
  sanity->add_option("--trials", sanity_trials)->check(CLI::PositiveNumber);
  sanity->add_option("--multistart", multistart);
  sanity->add_option("--max-iter", max_iter);
  sanity->add_option("--seed", seed);
  sanity->add_option("--output", output);

  // bench-tightness / bench-speedup share options
  std::string bench_input;
  std::vector<int> bench_k = {1, 2, 3};
  std::vector<int> bench_n = {16, 32, 64};
  int bench_trials = 20;
  auto add_bench_options = [&](CLI::App* cmd) {
    cmd->add_option("--input", bench_input, "dataset file (otherwise generated walks)");
    cmd->add_option("--format", format_name);
    cmd->add_option("--k", bench_k);
    cmd->add_option("--n", bench_n);
    cmd->add_option("--trials", bench_trials, "pairs per (k, n) cell")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--multistart", multistart);
    cmd->add_option("--max-iter", max_iter);
    cmd->add_option("--seed", seed);
    cmd->add_option("--output", output);
  };
  auto* tightness = app.add_subcommand(
      "bench-tightness", "Tightness of the approximations vs the optimizer");
  add_bench_options(tightness);
  auto* speedup = app.add_subcommand(
      "bench-speedup", "Wall-clock speedup of the approximations vs the optimizer");
  add_bench_options(speedup);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dist->parsed()) {
      return run_dist(dist_a, dist_b, dist_measure, format_name, dist_dewarp,
                      multistart, max_iter, seed);
    }
    if (gen->parsed()) {
      return run_gen(gen_k, gen_n, gen_count, gen_step, gen_smooth, seed, output,
                     format_name);
    }
    if (dw->parsed()) {
      return run_dewarp(dw_input, output, dw_m, format_name, dw_id);
    }
    if (sanity->parsed()) {
      return run_sanity(sanity_k, sanity_n, sanity_trials, multistart, max_iter, seed,
                        output);
    }
    if (tightness->parsed()) {
      return run_bench_tightness(bench_input, format_name, bench_k, bench_n,
                                 bench_trials, multistart, max_iter, seed, output);
    }
    if (speedup->parsed()) {
      return run_bench_speedup(bench_input, format_name, bench_k, bench_n,
                               bench_trials, multistart, max_iter, seed, output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
