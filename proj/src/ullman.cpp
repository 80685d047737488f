#include "schatten/ullman.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "schatten/quadrature.hpp"
#include "schatten/special.hpp"

namespace schatten {

UllmanDist::UllmanDist(double p) : p_(p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("UllmanDist: requires finite p > 0");
  }
}

double UllmanDist::density(double x) const {
  const double ax = std::abs(x);
  if (ax >= 1.0) return 0.0;
  if (ax == 0.0) {
    if (p_ > 1.0) return p_ / (kPi * (p_ - 1.0));
    return std::numeric_limits<double>::infinity();
  }
  const double upper = std::sqrt(1.0 - ax * ax);
  const double ex = 0.5 * (p_ - 2.0);
  const double x2 = ax * ax;
  const double integral = adaptive_integrate(
      [&](double s) { return std::pow(s * s + x2, ex); }, 0.0, upper, 1e-13, 1e-13);
  return p_ / kPi * integral;
}

double UllmanDist::cdf(double x) const {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x == 0.0) return 0.5;
  const double ax = std::abs(x);
  const double upper = std::sqrt(1.0 - ax * ax);
  const double ex = 0.5 * (p_ - 2.0);
  const double x2 = ax * ax;
  // atan2(ax, s) = atan(ax/s) on s > 0 and pi/2 at s = 0, so the integrand
  // is continuous at the left endpoint.
  const double integral = adaptive_integrate(
      [&](double s) { return std::pow(s * s + x2, ex) * s * std::atan2(ax, s); }, 0.0,
      upper, 1e-12, 1e-13);
  const double upper_half = 0.5 + 0.5 * std::pow(ax, p_) + p_ / kPi * integral;
  return x > 0.0 ? upper_half : 1.0 - upper_half;
}

double UllmanDist::quantile(double q) const {
  if (!(q > 0.0) || !(q < 1.0)) {
    throw std::invalid_argument("UllmanDist::quantile: requires 0 < q < 1");
  }
  double lo = -1.0, hi = 1.0;
  double mid = 0.0;
  for (int iter = 0; iter < 1200; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f = cdf(mid);
    if (std::abs(f - q) <= 1e-10) return mid;
    if (f < q) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

double UllmanDist::sample(RngStream& rng) const {
  const double w = rng.uniform();
  const double v = rng.uniform_open();
  return std::cos(kPi * w) * std::pow(v, 1.0 / p_);
}

double UllmanDist::abs_moment() const {
  return std::exp(log_gamma(0.5 * (p_ + 1.0)) - log_gamma(0.5 * (p_ + 2.0))) /
         (2.0 * std::sqrt(kPi));
}

double UllmanDist::log_distance_expectation() const {
  return -std::log(2.0) - 0.5 / p_;
}

}  // namespace schatten
