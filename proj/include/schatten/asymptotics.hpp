#pragma once

#include <cstdint>

#include "schatten/matrix.hpp"
#include "schatten/pexponent.hpp"

namespace schatten {

// Limit constant: 1/4 * (2 sqrt(pi) Gamma(p+1) / (sqrt(e) Gamma(p+1/2)))^(1/p),
// and exactly 1/4 for the infinite exponent. Gamma ratios in log space.
double delta(PExponent p);

// -2 log 2 + (1/p) log(2 sqrt(pi) Gamma(p+1) / (sqrt(e) Gamma(p+1/2))),
// finite p only; equals log(delta(p)).
double sup_J(double p);

struct VolumeAsymptote {
  int n;
  PExponent p;
  Field field;
  double radius;       // predicted Vol^(1/dim)
  long long dim;       // n^2 (Real) or 2 n^2 (Complex)
};

// radius = n^(-1/2 - 1/p) sqrt(c pi e^(3/2) delta(p/2)), c = 2 Real / 1 Complex.
VolumeAsymptote volume_radius_asymptote(int n, PExponent p, Field field);

// ||id: S_2 -> S_p|| = n^(1/p - 1/2) for 1 <= p < 2, else 1.
// Throws std::invalid_argument for p < 1.
double op_norm_2_to_p(int n, PExponent p);

struct VolumeRatioAsymptote {
  double value;       // sqrt(delta(p/2)/delta(1)), times n^(1/2-1/p) for p >= 2
  double gamma_form;  // equivalent gamma-function form; agrees to 1e-12
};

// Volume-ratio asymptote; field-independent, the tag is accepted for
// interface symmetry. Throws std::invalid_argument for p < 1 and
// std::logic_error if the two forms disagree beyond 1e-12.
VolumeRatioAsymptote volume_ratio_asymptote(int n, PExponent p, Field field);

}  // namespace schatten
