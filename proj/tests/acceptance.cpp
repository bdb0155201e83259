// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "congruence/approx.hpp"
#include "congruence/core.hpp"
#include "congruence/data.hpp"
#include "congruence/optimize.hpp"
#include "test_helpers.hpp"

using namespace cgd;
using testing::make_series;
using testing::random_isometry;
using testing::random_series;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

TimeSeries uniform_series(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Vector> pts;
  for (int i = 0; i < n; ++i) {
    Vector p(k);
    for (int j = 0; j < k; ++j) p(j) = unit(rng);
    pts.push_back(std::move(p));
  }
  return TimeSeries(std::move(pts));
}

// 1. Lower-bound chain: approximations below the objective at sampled
// isometries; fast delta below delta.
void criterion_1() {
  const int lengths[] = {8, 16, 32};
  int checked = 0;
  bool ok = true;
  for (int pair = 0; pair < 500 && ok; ++pair) {
    const int k = 1 + pair % 3;
    const int n = lengths[(pair / 3) % 3];
    const TimeSeries s = random_series(n, k, 10000 + 2 * pair);
    const TimeSeries t = random_series(n, k, 10001 + 2 * pair);
    const double lbs[] = {delta_distance(s, t), fast_delta_distance(s, t),
                          greedy_delta_distance(s, t),
                          fast_greedy_delta_distance(s, t)};
    if (lbs[1] > lbs[0] + 1e-12) {
      ok = false;
      break;
    }
    for (int gi = 0; gi < 50; ++gi) {
      const Isometry g =
          random_isometry(k, static_cast<std::uint64_t>(1000 * pair + gi));
      const double f = objective(s, t, g);
      for (double lb : lbs) {
        if (lb > f + 1e-6) ok = false;
      }
      ++checked;
    }
  }
  report(1, ok,
         "lower-bound chain on 500 pairs x 50 isometries (" +
             std::to_string(checked) + " objective evaluations)");
}

// 2. Hand-derived exact values.
void criterion_2() {
  const TimeSeries pair_s = make_series({{0, 0}, {1, 0}});
  const TimeSeries pair_t = make_series({{0, 0}, {2, 0}});
  const TimeSeries six_s = make_series({{0}, {0}, {0}, {0}, {0}, {0}});
  const TimeSeries six_t = make_series({{0}, {0}, {0}, {3}, {3}, {3}});

  bool ok = true;
  auto expect = [&](double got, double want) {
    if (std::abs(got - want) > 1e-9) ok = false;
  };
  expect(delta_distance(pair_s, pair_t), 1.0);
  expect(greedy_delta_distance(pair_s, pair_t), 1.0);
  expect(congruence_oracle_2d(pair_s, pair_t, 3600), 1.0);
  expect(delta_distance(six_s, six_t), 9.0);
  expect(fast_delta_distance(six_s, six_t), 6.0);
  expect(greedy_delta_distance(six_s, six_t), 9.0);
  expect(fast_greedy_delta_distance(six_s, six_t), 6.0);
  report(2, ok, "hand-derived exact values match to 1e-9");
}

// 3. Triangle inequality and symmetry of the delta distance.
void criterion_3() {
  bool ok = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = 1 + trial % 3;
    const int n = 3 + trial % 12;
    const TimeSeries r = random_series(n, k, 20000 + 3 * trial);
    const TimeSeries s = random_series(n, k, 20001 + 3 * trial);
    const TimeSeries t = random_series(n, k, 20002 + 3 * trial);
    if (delta_distance(r, t) > delta_distance(r, s) + delta_distance(s, t) + 1e-9) {
      ok = false;
    }
    if (std::abs(delta_distance(r, t) - delta_distance(t, r)) > 1e-12) ok = false;
  }
  report(3, ok, "delta distance triangle inequality and symmetry on 1000 triples");
}

// 4. Congruent pairs: approximations exactly zero, optimizer near zero.
void criterion_4() {
  const int lengths[] = {16, 32, 64};
  bool approx_ok = true;
  int optimizer_good = 0;
  int optimizer_kept = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + trial % 3;
    const int n = lengths[(trial / 3) % 3];
    const TimeSeries t = random_series(n, k, 30000 + trial);
    const Isometry g = random_isometry(k, 31000 + static_cast<std::uint64_t>(trial));
    const TimeSeries s = apply_isometry(t, g);

    if (delta_distance(t, s) > 1e-9 || fast_delta_distance(t, s) > 1e-9 ||
        greedy_delta_distance(t, s) > 1e-9 || fast_greedy_delta_distance(t, s) > 1e-9) {
      approx_ok = false;
    }

    OptimizerConfig cfg;
    cfg.multistart_count = 8;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const OptimizerResult result = congruence_upper(s, t, cfg);
    if (result.value > 100.0) continue;  // optimizer failed outright; filtered
    ++optimizer_kept;
    if (result.value <= 1e-3) ++optimizer_good;
  }
  const double fraction =
      optimizer_kept > 0 ? static_cast<double>(optimizer_good) / optimizer_kept : 0.0;
  const bool ok = approx_ok && fraction >= 0.9;
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "congruent pairs: approximations <= 1e-9, optimizer <= 1e-3 in "
                "%.1f%% of %d kept runs",
                100.0 * fraction, optimizer_kept);
  report(4, ok, detail);
}

// 5. Optimizer against the dense-sweep oracle at k <= 2.
void criterion_5() {
  bool ok = true;
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + trial % 2;
    const int n = 8 + (trial % 3) * 4;  // 8, 12, 16
    const TimeSeries s = uniform_series(n, k, 40000 + 2 * trial);
    const TimeSeries t = uniform_series(n, k, 40001 + 2 * trial);

    OptimizerConfig cfg;
    cfg.multistart_count = 12;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const double upper = congruence_upper(s, t, cfg).value;
    const double oracle = congruence_oracle_2d(s, t, 3600);
    worst = std::max(worst, std::abs(upper - oracle));
    if (std::abs(upper - oracle) > 1e-2) ok = false;
  }
  char detail[120];
  std::snprintf(detail, sizeof(detail),
                "optimizer vs 2-D oracle on 50 pairs, worst gap %.2e", worst);
  report(5, ok, detail);
}

// 6. Desk-scale speedup at k=3, n=64.
void criterion_6() {
  const int pairs = 12;
  std::vector<double> su_delta, su_fast_delta, su_greedy, su_fast_greedy;
  OptimizerConfig cfg;
  cfg.multistart_count = 8;

  for (int pair = 0; pair < pairs; ++pair) {
    WalkParams params;
    params.dim = 3;
    params.length = 64;
    params.smoothing_window = 3;
    params.seed = 50000 + 2 * static_cast<std::uint64_t>(pair);
    const TimeSeries s = generate_walk(params);
    params.seed += 1;
    const TimeSeries t = generate_walk(params);
    cfg.seed = static_cast<std::uint64_t>(pair);

    auto best_of = [](int reps, auto&& fn) {
      double best = std::numeric_limits<double>::infinity();
      for (int r = 0; r < reps; ++r) {
        const double start = now();
        fn();
        best = std::min(best, now() - start);
      }
      return std::max(best, 1e-9);
    };
    volatile double sink = 0.0;
    const double t_opt = best_of(1, [&] { sink = congruence_upper(s, t, cfg).value; });
    su_delta.push_back(t_opt / best_of(3, [&] { sink = delta_distance(s, t); }));
    su_fast_delta.push_back(t_opt /
                            best_of(3, [&] { sink = fast_delta_distance(s, t); }));
    su_greedy.push_back(t_opt / best_of(3, [&] { sink = greedy_delta_distance(s, t); }));
    su_fast_greedy.push_back(
        t_opt / best_of(3, [&] { sink = fast_greedy_delta_distance(s, t); }));
    (void)sink;
  }

  auto median = [](std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + static_cast<ptrdiff_t>(v.size() / 2), v.end());
    return v[v.size() / 2];
  };
  const double m_delta = median(su_delta);
  const double m_fast_delta = median(su_fast_delta);
  const double m_greedy = median(su_greedy);
  const double m_fast_greedy = median(su_fast_greedy);
  const bool ok = m_delta >= 100 && m_fast_delta >= 100 && m_greedy >= 100 &&
                  m_fast_greedy >= 100;
  char detail[200];
  std::snprintf(detail, sizeof(detail),
                "median speedups at k=3, n=64: delta %.0fx, fast delta %.0fx, "
                "greedy %.0fx, fast greedy %.0fx (all >= 100 required)",
                m_delta, m_fast_delta, m_greedy, m_fast_greedy);
  report(6, ok, detail);
  if (m_fast_delta < m_delta) {
    std::printf("  note: fast delta not fastest on this sample\n");
  }
}

// 7. Complexity scaling of delta (quadratic) and fast delta (quasi-linear).
void criterion_7() {
  const int lengths[] = {1024, 2048, 4096};
  double t_delta[3];
  double t_fast[3];

  for (int li = 0; li < 3; ++li) {
    WalkParams params;
    params.dim = 2;
    params.length = lengths[li];
    params.smoothing_window = 3;
    params.seed = 60000 + static_cast<std::uint64_t>(li);
    const TimeSeries s = generate_walk(params);
    params.seed += 100;
    const TimeSeries t = generate_walk(params);

    std::vector<double> runs_delta, runs_fast;
    volatile double sink = 0.0;
    for (int run = 0; run < 20; ++run) {
      double start = now();
      sink = delta_distance(s, t);
      runs_delta.push_back(now() - start);
      start = now();
      sink = fast_delta_distance(s, t);
      runs_fast.push_back(now() - start);
    }
    (void)sink;
    auto median = [](std::vector<double> v) {
      std::nth_element(v.begin(), v.begin() + static_cast<ptrdiff_t>(v.size() / 2),
                       v.end());
      return v[v.size() / 2];
    };
    t_delta[li] = median(runs_delta);
    t_fast[li] = median(runs_fast);
  }

  bool ok = true;
  char detail[240];
  double factors[4];
  for (int step = 0; step < 2; ++step) {
    factors[step] = t_delta[step + 1] / t_delta[step];
    factors[2 + step] = t_fast[step + 1] / t_fast[step];
    if (factors[step] < 3.0 || factors[step] > 5.0) ok = false;
    if (factors[2 + step] < 1.6 || factors[2 + step] > 2.6) ok = false;
  }
  std::snprintf(detail, sizeof(detail),
                "doubling factors: delta %.2f, %.2f (need [3,5]); fast delta "
                "%.2f, %.2f (need [1.6,2.6])",
                factors[0], factors[1], factors[2], factors[3]);
  report(7, ok, detail);
}

// 8. Dewarping yields equal consecutive spacing.
void criterion_8() {
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    WalkParams params;
    params.dim = 1 + trial % 3;
    params.length = 16 + trial % 48;
    params.seed = 70000 + static_cast<std::uint64_t>(trial);
    const TimeSeries walk = generate_walk(params);
    const TimeSeries out = arc_length_resample(walk, walk.length());

    double total = 0.0;
    for (int i = 1; i < walk.length(); ++i) total += (walk[i] - walk[i - 1]).norm();
    for (int i = 0; i + 2 < out.length(); ++i) {
      const double gap = std::abs((out[i + 1] - out[i]).norm() -
                                  (out[i + 2] - out[i + 1]).norm());
      if (gap > 1e-9 * total) ok = false;
    }
  }
  report(8, ok, "dewarping equalizes consecutive distances on 100 walks");
}

// 9. Lossless serialization roundtrips.
void criterion_9() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cgd_acceptance";
  fs::create_directories(dir);

  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const bool csv = trial % 2 == 0;
    const int k = 1 + trial % 4;
    std::mt19937_64 rng(80000 + static_cast<std::uint64_t>(trial));
    std::uniform_real_distribution<double> scale_dist(-12.0, 12.0);

    Dataset ds;
    const int entries = csv ? 1 : 1 + trial % 4;
    for (int e = 0; e < entries; ++e) {
      const double scale = std::pow(10.0, scale_dist(rng));
      ds.add("entry-" + std::to_string(e),
             e % 2 ? std::optional<std::string>("label-" + std::to_string(e))
                   : std::nullopt,
             random_series(2 + trial % 10, k,
                           static_cast<std::uint64_t>(90000 + 10 * trial + e), scale));
    }

    const Format format = csv ? Format::CsvSingle : Format::JsonlCollection;
    const std::string path = (dir / ("ds" + std::to_string(trial))).string();
    save_dataset(ds, path, format);
    const Dataset loaded = load_dataset(path, format);

    if (loaded.size() != ds.size()) ok = false;
    for (int e = 0; ok && e < ds.size(); ++e) {
      const TimeSeries& a = ds[e].series;
      const TimeSeries& b = loaded[e].series;
      if (a.length() != b.length() || a.dim() != b.dim()) ok = false;
      for (int i = 0; ok && i < a.length(); ++i) {
        for (int j = 0; j < a.dim(); ++j) {
          if (a[i](j) != b[i](j)) ok = false;  // bit-exact
        }
      }
    }
  }
  fs::remove_all(dir);
  report(9, ok, "bit-exact save/load roundtrip on 100 datasets, both formats");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
