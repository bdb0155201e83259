#include "congruence/core.hpp"

#include <cmath>
#include <random>

namespace cgd {

TimeSeries::TimeSeries(std::vector<Vector> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw LengthError("time series must contain at least one point");
  }
  dim_ = static_cast<int>(points_.front().size());
  if (dim_ < 1) {
    throw DimensionError("time series points must have dimension >= 1");
  }
  for (const Vector& p : points_) {
    if (static_cast<int>(p.size()) != dim_) {
      throw DimensionError("all points of a time series must share one dimension");
    }
  }
}

TimeSeries TimeSeries::from_row_major(const double* data, int n, int k) {
  if (n < 1 || k < 1) {
    throw LengthError("time series shape must satisfy n >= 1, k >= 1");
  }
  std::vector<Vector> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    pts.emplace_back(Eigen::Map<const Vector>(data + static_cast<ptrdiff_t>(i) * k, k));
  }
  return TimeSeries(std::move(pts));
}

Isometry::Isometry(Matrix rotation_in, Vector translation_in)
    : rotation(std::move(rotation_in)), translation(std::move(translation_in)) {
  const int k = static_cast<int>(translation.size());
  if (rotation.rows() != k || rotation.cols() != k || k < 1) {
    throw DimensionError("isometry rotation must be k x k matching the translation");
  }
  const double ortho = (rotation * rotation.transpose() - Matrix::Identity(k, k)).norm();
  if (ortho > 1e-9) {
    throw DimensionError("isometry rotation is not orthogonal within 1e-9");
  }
  const double det = rotation.determinant();
  if (std::abs(std::abs(det) - 1.0) > 1e-9) {
    throw DimensionError("isometry rotation determinant must be +/-1");
  }
}

Isometry Isometry::identity(int k) {
  return Isometry(Matrix::Identity(k, k), Vector::Zero(k));
}

double euclid(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("euclid: vectors must have equal dimension");
  }
  return (a - b).norm();
}

SelfSimMatrix self_similarity(const TimeSeries& series) {
  const int n = series.length();
  Matrix entries = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = (series[i] - series[j]).norm();
      entries(i, j) = d;
      entries(j, i) = d;
    }
  }
  return SelfSimMatrix(std::move(entries));
}

TimeSeries apply_isometry(const TimeSeries& series, const Isometry& g) {
  if (g.dim() != series.dim()) {
    throw DimensionError("apply_isometry: dimension mismatch");
  }
  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(series.length()));
  for (const Vector& p : series.points()) {
    out.emplace_back(g.rotation * p + g.translation);
  }
  return TimeSeries(std::move(out));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Matrix random_orthogonal(int k, std::uint64_t seed) {
  if (k < 1) {
    throw DimensionError("random_orthogonal: k must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Matrix m(k, k);
  for (int col = 0; col < k; ++col) {
    // Gram-Schmidt against previous columns; redraw on near-degenerate draws.
    while (true) {
      Vector v(k);
      for (int row = 0; row < k; ++row) v(row) = gauss(rng);
      for (int prev = 0; prev < col; ++prev) {
        v -= m.col(prev).dot(v) * m.col(prev);
      }
      const double norm = v.norm();
      if (norm > 1e-8) {
        m.col(col) = v / norm;
        break;
      }
    }
  }
  if ((mix_seed(seed, 0xc0f1ULL) & 1ULL) != 0) {
    m.col(k - 1) *= -1.0;
  }
  return m;
}

}  // namespace cgd
