#pragma once

#include <cstdint>
#include <vector>

#include "schatten/measure.hpp"

namespace schatten {

struct MaximizeOptions {
  double tol = 1e-11;     // stop when a full round improves the objective by less
  int max_iters = 10000;  // maximum rounds (coordinate sweep + polish)
  int restarts = 3;
  std::uint64_t seed = 1;
  // The maximizer is known to have t_1 = 0; keeping it pinned removes one
  // degree of freedom. Released only by the verification tests.
  bool pin_first = true;
};

struct FeketeSolution {
  int n;
  double p;
  PointConfiguration points;
  double log_delta_n;
  double delta_n;
  int iterations;
  bool converged;
};

struct DeltaSequenceRow {
  int n;
  double delta_n;
  double log_delta_n;
  bool converged;
};

struct DeltaSequence {
  double p;
  std::vector<DeltaSequenceRow> rows;  // n = 2..n_max in order
  double extrapolated;                 // least-squares limit of delta_n
  bool all_converged;
};

// (2/(n(n-1))) sum_{i<j} log|t_i - t_j| - (1/p) log((1/n) sum t_i^p);
// -inf on coincident points. Throws std::domain_error when all points are 0
// and std::invalid_argument for n < 2.
double objective(const PointConfiguration& cfg, double p);

// Initialization used by maximize: t_i = sqrt of quantiles of |U|, U drawn
// from the order-2p member of the distribution family (the continuum
// maximizer), with the first point at 0. Exposed for the invariant test
// "result is at least as good as the start".
std::vector<double> quantile_initialization(int n, double p);

// Best local maximizer over opts.restarts randomized starts. The returned
// configuration is sorted, rescaled to (1/n) sum t_i^p = 1, and has
// log_delta_n equal to objective(points, p) exactly as evaluated.
FeketeSolution maximize(int n, double p, const MaximizeOptions& opts = {});

// delta_n for n = 2..n_max plus the extrapolated limit from the model
// log delta_n ~ c0 + a (log n)/n + b/n fitted over the top half of the
// range. Rows for different n are independent and may be computed on
// `threads` workers; output order is fixed regardless.
DeltaSequence delta_sequence(double p, int n_max, const MaximizeOptions& opts = {},
                             int threads = 1);

}  // namespace schatten
