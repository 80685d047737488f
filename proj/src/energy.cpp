#include "schatten/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "schatten/rng.hpp"
#include "schatten/special.hpp"

namespace schatten {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Second primitive of log: d2/du2 H(u) = log|u|, H(0) = 0.
double log_primitive2(double u) {
  if (u == 0.0) return 0.0;
  return 0.25 * u * u * (2.0 * std::log(std::abs(u)) - 3.0);
}

// Exact int_{a1}^{b1} int_{a2}^{b2} log|x - y| dy dx.
double cell_pair_integral(double a1, double b1, double a2, double b2) {
  return log_primitive2(b1 - a2) + log_primitive2(a1 - b2) - log_primitive2(a1 - a2) -
         log_primitive2(b1 - b2);
}

// Mean log-distance between two independent draws conditioned on landing in
// distinct groups: (sum_{i<j, groups differ} 2 w_i w_j log|x_i - x_j|) divided
// by the same sum of pair weights. Dividing by the pair mass makes the value
// shift by exactly log(a) under x -> a*x (so J_functional is scale invariant),
// and because each group keeps its total weight under symmetrize_sqrt the
// normalizer is preserved by that map, keeping the square-root symmetrization
// identity exact on atoms. For equal weights with all groups distinct this
// reduces to pairwise_log_energy. -inf when distinct-group atoms coincide or
// when no distinct-group pair carries weight (a point mass).
double atomic_cross_energy(const std::vector<DiscreteMeasure::Atom>& atoms) {
  double total = 0.0;
  double pair_mass = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].weight == 0.0) continue;
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[j].weight == 0.0 || atoms[i].group == atoms[j].group) continue;
      const double d = std::abs(atoms[i].location - atoms[j].location);
      if (d == 0.0) return kNegInf;
      const double w = 2.0 * atoms[i].weight * atoms[j].weight;
      total += w * std::log(d);
      pair_mass += w;
    }
  }
  if (pair_mass == 0.0) return kNegInf;
  return total / pair_mass;
}

}  // namespace

double pairwise_log_energy(const PointConfiguration& cfg) {
  const auto& t = cfg.points();
  const int n = cfg.size();
  if (n < 2) throw std::invalid_argument("pairwise_log_energy: needs n >= 2");
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(t[i] - t[j]);
      if (d == 0.0) return kNegInf;
      sum += std::log(d);
    }
  }
  return 2.0 / (static_cast<double>(n) * (n - 1)) * sum;
}

double measure_log_energy(const DiscreteMeasure& mu) {
  if (mu.atomic()) {
    throw std::invalid_argument(
        "measure_log_energy: atomic measure has a -inf diagonal; use pairwise_log_energy");
  }
  const auto& cells = mu.cells();
  const std::size_t m = cells.size();
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& ci = cells[i];
    if (ci.density == 0.0) continue;
    total += ci.density * ci.density * cell_pair_integral(ci.lo, ci.hi, ci.lo, ci.hi);
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& cj = cells[j];
      if (cj.density == 0.0) continue;
      total += 2.0 * ci.density * cj.density * cell_pair_integral(ci.lo, ci.hi, cj.lo, cj.hi);
    }
  }
  return total;
}

double J_functional(const DiscreteMeasure& mu, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("J_functional: requires finite p > 0");
  }
  const double moment = mu.abs_moment(p);
  if (moment == 0.0) {
    throw std::domain_error("J_functional: point mass at 0 is outside the domain");
  }
  const double energy = mu.atomic() ? atomic_cross_energy(mu.atoms()) : measure_log_energy(mu);
  if (energy == kNegInf) return kNegInf;
  return energy - std::log(moment) / p;
}

double external_field(double p, double x) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("external_field: requires finite p > 0");
  }
  const double coeff =
      0.5 * std::sqrt(kPi) * std::exp(log_gamma(0.5 * p) - log_gamma(0.5 * (p + 1.0)));
  return coeff * std::pow(std::abs(x), p);
}

double field_energy(const DiscreteMeasure& mu, double p) {
  if (mu.atomic()) {
    throw std::invalid_argument("field_energy: atomic measure has a -inf diagonal");
  }
  return -measure_log_energy(mu) + 2.0 * external_field(p, 1.0) * mu.abs_moment(p);
}

DiscreteMeasure symmetrize_sqrt(const DiscreteMeasure& mu) {
  if (mu.atomic()) {
    std::vector<DiscreteMeasure::Atom> out;
    out.reserve(2 * mu.atoms().size());
    for (const auto& a : mu.atoms()) {
      if (a.location < 0.0) {
        throw std::invalid_argument("symmetrize_sqrt: support must be in [0, inf)");
      }
      const double r = std::sqrt(a.location);
      out.push_back({-r, 0.5 * a.weight, a.group});
      out.push_back({r, 0.5 * a.weight, a.group});
    }
    return DiscreteMeasure::from_atoms_grouped(std::move(out));
  }

  const auto& cells = mu.cells();
  for (const auto& c : cells) {
    if (c.lo < -1e-12) throw std::invalid_argument("symmetrize_sqrt: support must be in [0, inf)");
  }
  // Distribution function of the input, piecewise linear across cells.
  std::vector<double> prefix(cells.size() + 1, 0.0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    prefix[i + 1] = prefix[i] + cells[i].density * (cells[i].hi - cells[i].lo);
  }
  auto cdf_in = [&](double v) {
    if (v <= cells.front().lo) return 0.0;
    if (v >= cells.back().hi) return prefix.back();
    auto it = std::upper_bound(cells.begin(), cells.end(), v,
                               [](double val, const DiscreteMeasure::Cell& c) { return val < c.lo; });
    const std::size_t k = static_cast<std::size_t>(it - cells.begin()) - 1;
    const double clamped = std::min(v, cells[k].hi);
    return prefix[k] + cells[k].density * std::max(0.0, clamped - cells[k].lo);
  };
  // Symmetrized distribution function G(u) = (1 + sign(u) F(u^2)) / 2.
  auto cdf_out = [&](double u) {
    const double f = cdf_in(u * u);
    return u >= 0.0 ? 0.5 * (1.0 + f) : 0.5 * (1.0 - f);
  };
  const double root = std::sqrt(cells.back().hi);
  const int m_out = std::max<int>(16, 2 * static_cast<int>(cells.size()));
  return DiscreteMeasure::from_cdf(cdf_out, -root, root, m_out);
}

DiscreteMeasure smooth_configuration(const PointConfiguration& cfg, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("smooth_configuration: requires eps > 0");
  }
  const auto& t = cfg.points();
  const int n = cfg.size();
  for (int i = 1; i < n; ++i) {
    if (!(t[i] - t[i - 1] > eps)) {
      throw std::invalid_argument("smooth_configuration: points must be separated by more than eps");
    }
  }
  const double density = 1.0 / (n * eps);
  std::vector<DiscreteMeasure::Cell> cells;
  cells.reserve(n);
  cells.push_back({0.0, eps, density});
  for (int i = 1; i < n; ++i) {
    if (t[i] - eps < cells.back().hi) {
      throw std::invalid_argument("smooth_configuration: points must be separated by more than eps");
    }
    cells.push_back({t[i] - eps, t[i], density});
  }
  return DiscreteMeasure::from_cells(std::move(cells));
}

}  // namespace schatten
