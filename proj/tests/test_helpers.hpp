#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "congruence/core.hpp"

namespace cgd::testing {

inline TimeSeries make_series(std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<Vector> pts;
  for (const auto& row : rows) {
    Vector p(static_cast<int>(row.size()));
    int j = 0;
    for (double x : row) p(j++) = x;
    pts.push_back(std::move(p));
  }
  return TimeSeries(std::move(pts));
}

inline TimeSeries random_series(int n, int k, std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, scale);
  std::vector<Vector> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vector p(k);
    for (int j = 0; j < k; ++j) p(j) = gauss(rng);
    pts.push_back(std::move(p));
  }
  return TimeSeries(std::move(pts));
}

inline Isometry random_isometry(int k, std::uint64_t seed, double translation_scale = 1.0) {
  const Matrix m = random_orthogonal(k, seed);
  std::mt19937_64 rng(mix_seed(seed, 0x1503ULL));
  std::normal_distribution<double> gauss(0.0, translation_scale);
  Vector v(k);
  for (int j = 0; j < k; ++j) v(j) = gauss(rng);
  return Isometry(m, v);
}

}  // namespace cgd::testing
