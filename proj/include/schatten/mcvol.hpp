#pragma once

#include <cstdint>
#include <vector>

#include "schatten/linalg.hpp"
#include "schatten/matrix.hpp"
#include "schatten/pexponent.hpp"
#include "schatten/rng.hpp"

namespace schatten {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;  // binomial: factor * sqrt(f(1-f)/samples)
  long long samples = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;  // no hits: value 0 and the error bar is meaningless
};

// Uniform draw from the unit Euclidean ball of dimension n^2 (Real) or
// 2 n^2 (Complex): normal direction scaled by u^(1/d). Entries are filled
// row-major, real part then imaginary part, then the radius uniform.
Matrix sample_uniform_euclidean_ball(int n, Field field, RngStream& rng);

// Vol(B_p)/Vol(B_2) by hit counting. For p <= 2, B_p sits inside B_2 and
// the hit fraction is the ratio; for p > 2, samples are drawn in the
// containing ball n^(1/2-1/p) B_2 and the fraction is scaled back by its
// volume factor. Workers get fixed contiguous sample ranges with streams
// keyed (seed, worker), reduced in worker order, so a given (seed, threads)
// pair is bit-reproducible.
Estimate volume_ratio_mc(int n, PExponent p, Field field, long long samples,
                         std::uint64_t seed, int threads = 1);

// Chamber-integral oracle for n in {2, 3}: ratio of
// int_{0<=s_1<=...<=s_n, ||s||_p<=1} w(s) ds to the same with ||s||_2 <= 1,
// w = prod |s_i^2 - s_j^2| (Real) or prod (s_i^2 - s_j^2)^2 prod s_i
// (Complex). Relative error ~1e-6; the decomposition constant cancels.
double singular_value_quadrature(int n, PExponent p, Field field);

// log Vol of the unit Euclidean ball in the given dimension.
double euclidean_ball_log_volume(long long dim);

struct RadiusRow {
  int n;
  long long dim;
  double measured_radius;   // (volume_ratio_mc * exact Euclidean volume)^(1/dim)
  double predicted_radius;  // volume_radius_asymptote
  double ratio;             // measured / predicted
  Estimate estimate;
};

// One row per n (each n <= 4); row i uses seed + n so rows are independent.
std::vector<RadiusRow> radius_convergence_table(PExponent p, Field field,
                                                const std::vector<int>& n_list,
                                                long long samples, std::uint64_t seed,
                                                int threads = 1);

}  // namespace schatten
