#pragma once

#include <cstdint>

#include "congruence/core.hpp"

namespace cgd {

struct OptimizerConfig {
  int max_iterations = 400;           // per local search
  double objective_tolerance = 1e-10; // stop when recent improvement is below this
  double constraint_tolerance = 1e-9; // max allowed ||M M^T - I||_F
  int multistart_count = 8;
  std::uint64_t seed = 0;

  void validate() const;
};

struct OptimizerResult {
  double value;
  Isometry isometry;
  int iterations_used;
  bool converged;
  double orthogonality_residual;
};

/// f(M,v) = sum_i d(s_i, M t_i + v).
double objective(const TimeSeries& s, const TimeSeries& t, const Isometry& g);

/// Upper bound on the congruence distance via multistart local minimization.
/// The rotation is parameterized as start * exp(skew(theta)), which is exactly
/// orthogonal; the translation is solved exactly per evaluation by
/// weiszfeld_median of the residuals. Both determinant branches are searched
/// from every start. Deterministic for a fixed cfg.seed.
OptimizerResult congruence_upper(const TimeSeries& s, const TimeSeries& t,
                                 const OptimizerConfig& cfg);

/// Independent ground truth for k <= 2: dense sweep over rotation angle
/// (both reflection branches), exact inner translation per angle. The grid
/// error is bounded by (2*pi/angle_steps) * sum_i ||t_i - mean(t)||.
double congruence_oracle_2d(const TimeSeries& s, const TimeSeries& t, int angle_steps);

/// Geometric median: argmin_v sum_i ||p_i - v||, Vardi-Zhang iteration with
/// the subgradient check when an iterate coincides with a data point.
Vector weiszfeld_median(const std::vector<Vector>& points, double tolerance,
                        int max_iterations);

/// Closed-form minimizer of the squared-distance analogue (orthogonal
/// Procrustes on the centered series); both determinant branches evaluated,
/// the better one kept. Used as one of the multistart initial solutions.
Isometry kabsch_init(const TimeSeries& s, const TimeSeries& t);

}  // namespace cgd
