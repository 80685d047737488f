#include "schatten/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "schatten/rng.hpp"

namespace schatten {

namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey's tabulation).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // Valid for x >= 0.5.
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: requires x > 0");
  if (x < 0.5) {
    // Reflection: log Gamma(x) = log(pi / sin(pi x)) - log Gamma(1 - x).
    return std::log(kPi / std::sin(kPi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

}  // namespace schatten
