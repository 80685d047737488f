#pragma once

#include "schatten/rng.hpp"

namespace schatten {

// Symmetric distribution on [-1, 1] that arises as the limiting singular
// value profile in the p-norm geometry here; p = 2 gives the semicircle
// rescaled to [-1, 1].
class UllmanDist {
 public:
  explicit UllmanDist(double p);

  double p() const noexcept { return p_; }

  // Density h_p. Returns 0 outside [-1, 1]; +infinity at x = 0 when p <= 1.
  double density(double x) const;

  // Distribution function, absolute accuracy ~1e-10. Reduces the double
  // integral to a single one:
  //   F(x) = 1/2 + x^p/2 + (p/pi) Int_0^sqrt(1-x^2) (s^2+x^2)^((p-2)/2) s atan(x/s) ds
  // for 0 < x <= 1, with F(-x) = 1 - F(x).
  double cdf(double x) const;

  // Inverse of cdf by bisection; |cdf(result) - q| <= 1e-9.
  // Throws std::invalid_argument unless 0 < q < 1.
  double quantile(double q) const;

  // Exact draw: cos(pi W) * V^(1/p) with W, V independent uniforms.
  double sample(RngStream& rng) const;

  // E|U|^p = Gamma((p+1)/2) / (2 sqrt(pi) Gamma((p+2)/2)).
  double abs_moment() const;

  // E log|U - V| for independent U, V: -log 2 - 1/(2p).
  double log_distance_expectation() const;

 private:
  double p_;
};

}  // namespace schatten
