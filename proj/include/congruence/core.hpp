#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "congruence/errors.hpp"

namespace cgd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Ordered sequence of n points in k-dimensional space. Immutable after
/// construction; all points share the same dimension.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<Vector> points);

  /// Row-major buffer: n rows of k coordinates.
  static TimeSeries from_row_major(const double* data, int n, int k);

  int length() const { return static_cast<int>(points_.size()); }
  int dim() const { return dim_; }

  const Vector& operator[](int i) const { return points_[static_cast<size_t>(i)]; }
  const std::vector<Vector>& points() const { return points_; }

 private:
  std::vector<Vector> points_;
  int dim_;
};

/// n x n matrix of pairwise Euclidean distances within one series.
/// Exactly symmetric with exactly zero diagonal: entries are computed for
/// i < j once and mirrored.
class SelfSimMatrix {
 public:
  explicit SelfSimMatrix(Matrix entries) : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.rows()); }
  double operator()(int i, int j) const { return entries_(i, j); }
  const Matrix& entries() const { return entries_; }

 private:
  Matrix entries_;
};

/// Orthogonal matrix plus translation. Construction checks orthogonality:
/// ||M M^T - I||_F <= 1e-9 and |det M| = 1 within 1e-9.
struct Isometry {
  Matrix rotation;
  Vector translation;

  Isometry(Matrix rotation, Vector translation);
  static Isometry identity(int k);

  int dim() const { return static_cast<int>(translation.size()); }
};

double euclid(const Vector& a, const Vector& b);

SelfSimMatrix self_similarity(const TimeSeries& series);

TimeSeries apply_isometry(const TimeSeries& series, const Isometry& g);

/// Deterministic per seed. Orthonormalizes a seeded Gaussian matrix by
/// Gram-Schmidt, then a seed-derived coin flip negates the last column so
/// both determinant signs are reachable across seeds.
Matrix random_orthogonal(int k, std::uint64_t seed);

/// splitmix64 step; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace cgd
