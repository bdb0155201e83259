#include "congruence/optimize.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace cgd {

namespace {

void check_pair(const TimeSeries& s, const TimeSeries& t) {
  if (s.dim() != t.dim()) {
    throw DimensionError("time series must have equal dimension");
  }
  if (s.length() != t.length()) {
    throw LengthError("time series must have equal length");
  }
}

std::vector<Vector> residuals(const TimeSeries& s, const TimeSeries& t, const Matrix& m) {
  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(s.length()));
  for (int i = 0; i < s.length(); ++i) {
    out.emplace_back(s[i] - m * t[i]);
  }
  return out;
}

double cost_about(const std::vector<Vector>& pts, const Vector& v) {
  double sum = 0.0;
  for (const Vector& p : pts) sum += (p - v).norm();
  return sum;
}

// Best translation and cost for a fixed rotation.
std::pair<double, Vector> inner_translation(const std::vector<Vector>& res,
                                            double tol, int max_iter) {
  Vector v = weiszfeld_median(res, tol, max_iter);
  return {cost_about(res, v), v};
}

// 1-D exact: v = median of residuals minimizes sum |r_i - v|.
std::pair<double, double> median_translation(std::vector<double> r) {
  const size_t mid = r.size() / 2;
  std::nth_element(r.begin(), r.begin() + static_cast<ptrdiff_t>(mid), r.end());
  const double v = r[mid];
  double cost = 0.0;
  for (double x : r) cost += std::abs(x - v);
  return {cost, v};
}

Matrix skew_from_params(const double* theta, int k) {
  Matrix a = Matrix::Zero(k, k);
  int idx = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      a(i, j) = theta[idx];
      a(j, i) = -theta[idx];
      ++idx;
    }
  }
  return a;
}

Matrix reflection(int k) {
  Matrix r = Matrix::Identity(k, k);
  r(k - 1, k - 1) = -1.0;
  return r;
}

struct EvalContext {
  const TimeSeries* s;
  const TimeSeries* t;
  const Matrix* base;
};

double eval_rotation(const TimeSeries& s, const TimeSeries& t, const Matrix& m) {
  return inner_translation(residuals(s, t, m), 1e-9, 100).first;
}

double gsl_objective(const gsl_vector* x, void* params) {
  const auto* ctx = static_cast<const EvalContext*>(params);
  const int k = ctx->s->dim();
  const Matrix m = (*ctx->base) * skew_from_params(x->data, k).exp();
  return eval_rotation(*ctx->s, *ctx->t, m);
}

struct LocalResult {
  double value;
  Matrix rotation;
  int iterations;
  bool converged;
};

// Nelder-Mead over the skew parameters, rotation relative to `base`.
LocalResult local_search(const TimeSeries& s, const TimeSeries& t, const Matrix& base,
                         const OptimizerConfig& cfg) {
  const int k = s.dim();
  const int dims = k * (k - 1) / 2;

  EvalContext ctx{&s, &t, &base};
  gsl_multimin_function func;
  func.n = static_cast<size_t>(dims);
  func.f = &gsl_objective;
  func.params = &ctx;

  gsl_vector* x0 = gsl_vector_calloc(static_cast<size_t>(dims));
  gsl_vector* step = gsl_vector_alloc(static_cast<size_t>(dims));
  gsl_vector_set_all(step, 0.5);

  gsl_multimin_fminimizer* minimizer =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2,
                                    static_cast<size_t>(dims));
  gsl_multimin_fminimizer_set(minimizer, &func, x0, step);

  bool converged = false;
  int iter = 0;
  double prev_best = std::numeric_limits<double>::infinity();
  int stall = 0;
  while (iter < cfg.max_iterations) {
    ++iter;
    if (gsl_multimin_fminimizer_iterate(minimizer) != GSL_SUCCESS) break;
    const double size = gsl_multimin_fminimizer_size(minimizer);
    if (gsl_multimin_test_size(size, 1e-10) == GSL_SUCCESS) {
      converged = true;
      break;
    }
    if (prev_best - minimizer->fval < cfg.objective_tolerance) {
      if (++stall >= 10) {
        converged = true;
        break;
      }
    } else {
      stall = 0;
    }
    prev_best = std::min(prev_best, minimizer->fval);
  }

  const Matrix rotation = base * skew_from_params(minimizer->x->data, k).exp();
  const double value = minimizer->fval;

  gsl_multimin_fminimizer_free(minimizer);
  gsl_vector_free(step);
  gsl_vector_free(x0);
  return {value, rotation, iter, converged};
}

OptimizerResult upper_1d(const TimeSeries& s, const TimeSeries& t) {
  const int n = s.length();
  double best = std::numeric_limits<double>::infinity();
  double best_m = 1.0;
  double best_v = 0.0;
  for (double sign : {1.0, -1.0}) {
    std::vector<double> r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = s[i](0) - sign * t[i](0);
    auto [cost, v] = median_translation(std::move(r));
    if (cost < best) {
      best = cost;
      best_m = sign;
      best_v = v;
    }
  }
  Matrix m(1, 1);
  m(0, 0) = best_m;
  Vector v(1);
  v(0) = best_v;
  return {best, Isometry(m, v), 1, true, 0.0};
}

}  // namespace

void OptimizerConfig::validate() const {
  if (max_iterations < 1 || multistart_count < 1) {
    throw Error("optimizer config: counts must be >= 1");
  }
  if (objective_tolerance <= 0.0 || constraint_tolerance <= 0.0) {
    throw Error("optimizer config: tolerances must be > 0");
  }
}

double objective(const TimeSeries& s, const TimeSeries& t, const Isometry& g) {
  check_pair(s, t);
  if (g.dim() != s.dim()) {
    throw DimensionError("isometry dimension mismatch");
  }
  double sum = 0.0;
  for (int i = 0; i < s.length(); ++i) {
    sum += (s[i] - (g.rotation * t[i] + g.translation)).norm();
  }
  return sum;
}

Vector weiszfeld_median(const std::vector<Vector>& points, double tolerance,
                        int max_iterations) {
  if (points.empty()) {
    throw LengthError("weiszfeld_median: need at least one point");
  }
  if (points.size() == 1) return points.front();

  const int k = static_cast<int>(points.front().size());
  Vector y = Vector::Zero(k);
  for (const Vector& p : points) y += p;
  y /= static_cast<double>(points.size());

  for (int iter = 0; iter < max_iterations; ++iter) {
    Vector weighted = Vector::Zero(k);
    Vector direction = Vector::Zero(k);
    double weight_sum = 0.0;
    int coincident = 0;
    for (const Vector& p : points) {
      const double d = (p - y).norm();
      if (d < 1e-13) {
        ++coincident;
        continue;
      }
      weighted += p / d;
      weight_sum += 1.0 / d;
      direction += (p - y) / d;
    }
    if (weight_sum == 0.0) return y;  // all points coincide with the iterate

    Vector next;
    if (coincident > 0) {
      // Vardi-Zhang: the iterate sits on a data point; optimal iff the
      // pull of the remaining points does not exceed the multiplicity.
      const double pull = direction.norm();
      if (pull <= static_cast<double>(coincident)) return y;
      const double ratio = static_cast<double>(coincident) / pull;
      next = (1.0 - ratio) * (weighted / weight_sum) + ratio * y;
    } else {
      next = weighted / weight_sum;
    }
    if ((next - y).norm() < tolerance) return next;
    y = std::move(next);
  }
  return y;
}

Isometry kabsch_init(const TimeSeries& s, const TimeSeries& t) {
  check_pair(s, t);
  const int k = s.dim();
  const int n = s.length();

  Vector s_mean = Vector::Zero(k);
  Vector t_mean = Vector::Zero(k);
  for (int i = 0; i < n; ++i) {
    s_mean += s[i];
    t_mean += t[i];
  }
  s_mean /= n;
  t_mean /= n;

  Matrix cov = Matrix::Zero(k, k);
  for (int i = 0; i < n; ++i) {
    cov += (s[i] - s_mean) * (t[i] - t_mean).transpose();
  }

  if (cov.norm() < 1e-14) {
    // Degenerate: one side is a single repeated point; align centroids only.
    return Isometry(Matrix::Identity(k, k), s_mean - t_mean);
  }

  Eigen::JacobiSVD<Matrix> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);

  double best_cost = std::numeric_limits<double>::infinity();
  Matrix best_m;
  for (int flip = 0; flip < 2; ++flip) {
    Matrix d = Matrix::Identity(k, k);
    if (flip == 1) d(k - 1, k - 1) = -1.0;  // flips the smallest singular direction
    const Matrix m = svd.matrixU() * d * svd.matrixV().transpose();
    double cost = 0.0;
    for (int i = 0; i < n; ++i) {
      cost += ((s[i] - s_mean) - m * (t[i] - t_mean)).squaredNorm();
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_m = m;
    }
  }
  return Isometry(best_m, s_mean - best_m * t_mean);
}

double congruence_oracle_2d(const TimeSeries& s, const TimeSeries& t, int angle_steps) {
  check_pair(s, t);
  const int k = s.dim();
  if (k > 2) {
    throw DimensionError("congruence_oracle_2d supports k <= 2 only");
  }
  if (k == 1) {
    return upper_1d(s, t).value;
  }
  if (angle_steps < 1) {
    throw Error("angle_steps must be >= 1");
  }

  double best = std::numeric_limits<double>::infinity();
  for (int step = 0; step < angle_steps; ++step) {
    const double angle = 2.0 * std::numbers::pi * step / angle_steps;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    Matrix rot(2, 2);
    rot << c, -sn, sn, c;
    for (int branch = 0; branch < 2; ++branch) {
      Matrix m = rot;
      if (branch == 1) m.col(1) *= -1.0;
      const double cost = inner_translation(residuals(s, t, m), 1e-10, 200).first;
      best = std::min(best, cost);
    }
  }
  return best;
}

OptimizerResult congruence_upper(const TimeSeries& s, const TimeSeries& t,
                                 const OptimizerConfig& cfg) {
  cfg.validate();
  check_pair(s, t);
  const int k = s.dim();

  if (k == 1) return upper_1d(s, t);

  gsl_set_error_handler_off();

  std::vector<Matrix> bases;
  bases.push_back(Matrix::Identity(k, k));
  if (cfg.multistart_count >= 2) {
    bases.push_back(kabsch_init(s, t).rotation);
  }
  for (int idx = 2; idx < cfg.multistart_count; ++idx) {
    bases.push_back(random_orthogonal(k, mix_seed(cfg.seed, static_cast<std::uint64_t>(idx))));
  }

  const Matrix refl = reflection(k);
  double best_value = std::numeric_limits<double>::infinity();
  Matrix best_rotation = Matrix::Identity(k, k);
  int total_iterations = 0;
  bool best_converged = false;

  for (const Matrix& base : bases) {
    for (int branch = 0; branch < 2; ++branch) {
      const Matrix start = branch == 0 ? base : Matrix(base * refl);
      LocalResult local = local_search(s, t, start, cfg);
      total_iterations += local.iterations;
      if (local.value < best_value) {
        best_value = local.value;
        best_rotation = local.rotation;
        best_converged = local.converged;
      }
    }
  }

  auto [value, translation] =
      inner_translation(residuals(s, t, best_rotation), 1e-12, 500);
  const double ortho =
      (best_rotation * best_rotation.transpose() - Matrix::Identity(k, k)).norm();
  const bool converged = (best_converged || value <= cfg.objective_tolerance) &&
                         ortho <= cfg.constraint_tolerance;
  return {value, Isometry(best_rotation, translation), total_iterations, converged, ortho};
}

}  // namespace cgd
