#include "congruence/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cgd {

namespace {

void check_pair(const TimeSeries& s, const TimeSeries& t, bool require_equal_length) {
  if (s.dim() != t.dim()) {
    throw DimensionError("time series must have equal dimension");
  }
  if (require_equal_length && s.length() != t.length()) {
    throw LengthError("time series must have equal length");
  }
}

// Sum over i of |d(s_i, s_{(i+delta)%n}) - d(t_i, t_{(i+delta)%n})|.
double diagonal_sum(const TimeSeries& s, const TimeSeries& t, int delta) {
  const int n = s.length();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + delta) % n;
    sum += std::abs((s[i] - s[j]).norm() - (t[i] - t[j]).norm());
  }
  return sum;
}

double greedy_from_pairs(std::vector<ScoredPair>& pairs, int n) {
  std::sort(pairs.begin(), pairs.end(), [](const ScoredPair& a, const ScoredPair& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<bool> used(static_cast<size_t>(n), false);
  double total = 0.0;
  for (const ScoredPair& p : pairs) {
    if (used[static_cast<size_t>(p.i)] || used[static_cast<size_t>(p.j)]) continue;
    total += p.score;
    used[static_cast<size_t>(p.i)] = true;
    used[static_cast<size_t>(p.j)] = true;
  }
  return total;
}

}  // namespace

double delta_distance(const TimeSeries& s, const TimeSeries& t) {
  check_pair(s, t, true);
  const int n = s.length();
  double best = 0.0;
  for (int delta = 1; delta < n; ++delta) {
    best = std::max(best, diagonal_sum(s, t, delta));
  }
  return 0.5 * best;
}

double fast_delta_distance(const TimeSeries& s, const TimeSeries& t) {
  check_pair(s, t, true);
  const int n = s.length();
  double best = 0.0;
  for (int delta = 1; delta < n; delta *= 2) {
    best = std::max(best, diagonal_sum(s, t, delta));
  }
  return 0.5 * best;
}

double greedy_delta_distance(const TimeSeries& s, const TimeSeries& t) {
  check_pair(s, t, true);
  const int n = s.length();
  std::vector<ScoredPair> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      pairs.push_back({i, j, std::abs((s[i] - s[j]).norm() - (t[i] - t[j]).norm())});
    }
  }
  return greedy_from_pairs(pairs, n);
}

double fast_greedy_delta_distance(const TimeSeries& s, const TimeSeries& t) {
  check_pair(s, t, true);
  const int n = s.length();
  std::vector<ScoredPair> pairs;
  for (int i = 0; i < n - 1; ++i) {
    for (int step = 1; i + step <= n - 1; step *= 2) {
      const int j = i + step;
      pairs.push_back({i, j, std::abs((s[i] - s[j]).norm() - (t[i] - t[j]).norm())});
    }
  }
  return greedy_from_pairs(pairs, n);
}

double dtw_distance(const TimeSeries& s, const TimeSeries& t) {
  check_pair(s, t, false);
  const int n = s.length();
  const int m = t.length();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> prev(static_cast<size_t>(m) + 1, inf);
  std::vector<double> curr(static_cast<size_t>(m) + 1, inf);
  prev[0] = 0.0;

  for (int i = 1; i <= n; ++i) {
    curr[0] = inf;
    for (int j = 1; j <= m; ++j) {
      const double cost = (s[i - 1] - t[j - 1]).norm();
      curr[static_cast<size_t>(j)] =
          cost + std::min({prev[static_cast<size_t>(j)], curr[static_cast<size_t>(j) - 1],
                           prev[static_cast<size_t>(j) - 1]});
    }
    std::swap(prev, curr);
  }
  return prev[static_cast<size_t>(m)];
}

}  // namespace cgd
