#pragma once

#include <vector>

#include "schatten/matrix.hpp"
#include "schatten/pexponent.hpp"

namespace schatten {

// Singular values in non-increasing order.
struct SingularSpectrum {
  std::vector<double> values;
};

// One-sided Jacobi SVD (cyclic sweeps, relative rotation threshold 1e-14).
// Complex input goes through the 2n x 2n real embedding [[X, -Y], [Y, X]],
// whose spectrum is that of X + iY doubled; adjacent pairs are averaged.
// Throws std::invalid_argument on non-finite entries.
SingularSpectrum singular_values(const Matrix& a);

// Internal kernel: m x m real matrix, column-major, destroyed in place.
// out must hold m doubles; written in non-increasing order.
void singular_values_inplace(double* colmaj, int m, double* out);

// (sum s_i^p)^(1/p), or s_max for the infinite exponent. Computed in scaled
// form s_max * (sum (s_i/s_max)^p)^(1/p) to avoid overflow for small p.
double schatten_norm(const Matrix& a, PExponent p);

// Membership in the closed unit ball of the p-(quasi)norm.
bool in_ball(const Matrix& a, PExponent p);

}  // namespace schatten
