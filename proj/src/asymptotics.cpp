#include "schatten/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "schatten/rng.hpp"
#include "schatten/special.hpp"

namespace schatten {

namespace {

// log(2 sqrt(pi) Gamma(p+1) / (sqrt(e) Gamma(p+1/2))).
double log_gamma_ratio_term(double p) {
  return std::log(2.0 * std::sqrt(kPi)) - 0.5 + log_gamma(p + 1.0) - log_gamma(p + 0.5);
}

PExponent half(PExponent p) {
  return p.is_infinite() ? PExponent::infinity() : PExponent(0.5 * p.value());
}

void require_norm_regime(PExponent p) {
  if (!p.is_infinite() && p.value() < 1.0) {
    throw std::invalid_argument("requires p >= 1 (norm regime)");
  }
}

}  // namespace

double delta(PExponent p) {
  if (p.is_infinite()) return 0.25;
  return 0.25 * std::exp(log_gamma_ratio_term(p.value()) / p.value());
}

double sup_J(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("sup_J: requires finite p > 0");
  }
  return -2.0 * std::log(2.0) + log_gamma_ratio_term(p) / p;
}

VolumeAsymptote volume_radius_asymptote(int n, PExponent p, Field field) {
  if (n < 1) throw std::invalid_argument("volume_radius_asymptote: needs n >= 1");
  const double c = field == Field::Real ? 2.0 : 1.0;
  const double radius = std::pow(static_cast<double>(n), -0.5 - p.inv()) *
                        std::sqrt(c * kPi * std::exp(1.5) * delta(half(p)));
  const long long nn = static_cast<long long>(n) * n;
  return VolumeAsymptote{n, p, field, radius, field == Field::Real ? nn : 2 * nn};
}

double op_norm_2_to_p(int n, PExponent p) {
  if (n < 1) throw std::invalid_argument("op_norm_2_to_p: needs n >= 1");
  require_norm_regime(p);
  if (p.is_infinite() || p.value() >= 2.0) return 1.0;
  return std::pow(static_cast<double>(n), 1.0 / p.value() - 0.5);
}

VolumeRatioAsymptote volume_ratio_asymptote(int n, PExponent p, Field field) {
  (void)field;  // The limit constant is the same over both fields.
  if (n < 1) throw std::invalid_argument("volume_ratio_asymptote: needs n >= 1");
  require_norm_regime(p);
  const bool grows = p.is_infinite() || p.value() >= 2.0;
  const double n_factor = grows ? std::pow(static_cast<double>(n), 0.5 - p.inv()) : 1.0;

  const double value = n_factor * std::sqrt(delta(half(p)) / delta(PExponent(1.0)));

  const double inv_p = p.inv();
  const double gamma_ratio =
      p.is_infinite()
          ? 1.0
          : std::exp((log_gamma(0.5 * p.value() + 1.0) - log_gamma(0.5 * p.value() + 0.5)) *
                     inv_p);
  const double gamma_form =
      n_factor * 0.5 * gamma_ratio *
      std::sqrt(std::exp(0.5 - inv_p) * std::pow(4.0 * kPi, inv_p));

  if (std::abs(value - gamma_form) > 1e-12 * std::max(1.0, std::abs(value))) {
    throw std::logic_error("volume_ratio_asymptote: closed forms disagree");
  }
  return VolumeRatioAsymptote{value, gamma_form};
}

}  // namespace schatten
