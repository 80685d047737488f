#include "schatten/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schatten {

namespace {

void check_weights(const std::vector<DiscreteMeasure::Atom>& atoms) {
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.location)) throw std::invalid_argument("DiscreteMeasure: non-finite atom");
    if (!(a.weight >= 0.0)) throw std::invalid_argument("DiscreteMeasure: negative weight");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("DiscreteMeasure: atom weights must sum to 1");
  }
}

void check_cells(const std::vector<DiscreteMeasure::Cell>& cells) {
  if (cells.empty()) throw std::invalid_argument("DiscreteMeasure: no cells");
  double total = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    if (!std::isfinite(c.lo) || !std::isfinite(c.hi) || !(c.hi > c.lo)) {
      throw std::invalid_argument("DiscreteMeasure: bad cell bounds");
    }
    if (!(c.density >= 0.0) || !std::isfinite(c.density)) {
      throw std::invalid_argument("DiscreteMeasure: bad cell density");
    }
    if (i > 0 && c.lo < cells[i - 1].hi - 1e-15 * std::abs(cells[i - 1].hi)) {
      throw std::invalid_argument("DiscreteMeasure: overlapping cells");
    }
    total += c.density * (c.hi - c.lo);
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw std::invalid_argument("DiscreteMeasure: cell mass must be 1");
  }
}

}  // namespace

PointConfiguration::PointConfiguration(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("PointConfiguration: empty");
  for (double t : points_) {
    if (!std::isfinite(t) || t < 0.0) {
      throw std::invalid_argument("PointConfiguration: points must be finite and >= 0");
    }
  }
  std::sort(points_.begin(), points_.end());
}

DiscreteMeasure DiscreteMeasure::from_atoms(const std::vector<std::pair<double, double>>& atoms) {
  std::vector<Atom> list;
  list.reserve(atoms.size());
  int group = 0;
  for (const auto& [x, w] : atoms) list.push_back({x, w, group++});
  return from_atoms_grouped(std::move(list));
}

DiscreteMeasure DiscreteMeasure::from_atoms_grouped(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("DiscreteMeasure: no atoms");
  check_weights(atoms);
  DiscreteMeasure mu;
  mu.atoms_ = std::move(atoms);
  return mu;
}

DiscreteMeasure DiscreteMeasure::from_grid(double a, double b,
                                           const std::vector<double>& node_values) {
  if (!(b > a) || node_values.size() < 2) {
    throw std::invalid_argument("DiscreteMeasure: grid needs b > a and >= 2 nodes");
  }
  const std::size_t m = node_values.size();
  const double h = (b - a) / static_cast<double>(m - 1);
  double trapezoid = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(node_values[i] >= 0.0) || !std::isfinite(node_values[i])) {
      throw std::invalid_argument("DiscreteMeasure: grid densities must be >= 0");
    }
    trapezoid += node_values[i] * ((i == 0 || i + 1 == m) ? 0.5 : 1.0);
  }
  trapezoid *= h;
  if (std::abs(trapezoid - 1.0) > 1e-8) {
    throw std::invalid_argument("DiscreteMeasure: grid trapezoid mass must be 1");
  }
  std::vector<Cell> cells(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    cells[i] = {a + h * static_cast<double>(i), a + h * static_cast<double>(i + 1),
                0.5 * (node_values[i] + node_values[i + 1])};
  }
  cells.back().hi = b;
  DiscreteMeasure mu;
  mu.cells_ = std::move(cells);
  return mu;
}

DiscreteMeasure DiscreteMeasure::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.lo < y.lo; });
  check_cells(cells);
  DiscreteMeasure mu;
  mu.cells_ = std::move(cells);
  return mu;
}

DiscreteMeasure DiscreteMeasure::from_cdf(const std::function<double(double)>& cdf, double a,
                                          double b, int num_cells) {
  if (!(b > a) || num_cells < 1) {
    throw std::invalid_argument("DiscreteMeasure: from_cdf needs b > a and cells >= 1");
  }
  const double total = cdf(b) - cdf(a);
  if (!(total > 0.0)) throw std::invalid_argument("DiscreteMeasure: cdf carries no mass on [a,b]");
  std::vector<Cell> cells;
  cells.reserve(num_cells);
  double prev_x = a;
  double prev_f = cdf(a);
  for (int i = 1; i <= num_cells; ++i) {
    const double x = a + (b - a) * static_cast<double>(i) / num_cells;
    const double f = cdf(x);
    const double mass = std::max(0.0, (f - prev_f) / total);
    cells.push_back({prev_x, x, mass / (x - prev_x)});
    prev_x = x;
    prev_f = f;
  }
  return from_cells(std::move(cells));
}

double DiscreteMeasure::mass() const {
  double total = 0.0;
  if (atomic()) {
    for (const auto& a : atoms_) total += a.weight;
  } else {
    for (const auto& c : cells_) total += c.density * (c.hi - c.lo);
  }
  return total;
}

double DiscreteMeasure::abs_moment(double p) const {
  if (!(p > 0.0)) throw std::invalid_argument("DiscreteMeasure: moment exponent must be > 0");
  double total = 0.0;
  if (atomic()) {
    for (const auto& a : atoms_) {
      if (a.location != 0.0) total += a.weight * std::pow(std::abs(a.location), p);
    }
    return total;
  }
  // Exact antiderivative of |x|^p: sign(x)|x|^(p+1)/(p+1).
  auto prim = [p](double u) {
    const double v = std::pow(std::abs(u), p + 1.0) / (p + 1.0);
    return u >= 0.0 ? v : -v;
  };
  for (const auto& c : cells_) total += c.density * (prim(c.hi) - prim(c.lo));
  return total;
}

DiscreteMeasure DiscreteMeasure::scaled(double a) const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("DiscreteMeasure: scale must be positive");
  }
  DiscreteMeasure out;
  if (atomic()) {
    out.atoms_ = atoms_;
    for (auto& atom : out.atoms_) atom.location *= a;
  } else {
    out.cells_ = cells_;
    for (auto& c : out.cells_) {
      c.lo *= a;
      c.hi *= a;
      c.density /= a;
    }
  }
  return out;
}

}  // namespace schatten
