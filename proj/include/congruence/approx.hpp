#pragma once

#include "congruence/core.hpp"

namespace cgd {

/// One candidate addend |d(s_i,s_j) - d(t_i,t_j)| with its index pair, i < j.
struct ScoredPair {
  int i;
  int j;
  double score;
};

/// Half the maximum, over cyclic offsets 0 < delta < n, of the L1 difference
/// between the wrapped diagonals of the two self-similarity matrices.
/// Pseudo-metric lower bound on the congruence distance.
double delta_distance(const TimeSeries& s, const TimeSeries& t);

/// delta_distance with the offset restricted to powers of two. Never exceeds
/// delta_distance; computes only the needed diagonals (n log n entries).
double fast_delta_distance(const TimeSeries& s, const TimeSeries& t);

/// Greedy maximum-weight selection of index-disjoint entries from
/// |Delta S - Delta T|. Lower bound on the congruence distance.
double greedy_delta_distance(const TimeSeries& s, const TimeSeries& t);

/// Greedy variant with candidate pairs restricted to j = i + 2^m, j <= n-1.
double fast_greedy_delta_distance(const TimeSeries& s, const TimeSeries& t);

/// Dynamic time warping with Euclidean local cost; lengths may differ.
double dtw_distance(const TimeSeries& s, const TimeSeries& t);

}  // namespace cgd
