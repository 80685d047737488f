#pragma once

#include <functional>
#include <vector>

namespace schatten {

// Sorted list of non-negative support points t_1 <= ... <= t_n.
class PointConfiguration {
 public:
  explicit PointConfiguration(std::vector<double> points);

  const std::vector<double>& points() const noexcept { return points_; }
  int size() const noexcept { return static_cast<int>(points_.size()); }

 private:
  std::vector<double> points_;
};

// Probability measure in one of two forms:
//  - atomic: weighted point masses. Atoms carry a group id; atoms that are
//    images of one source point under symmetrization share a group, and
//    cross-energy sums skip same-group pairs exactly like self-pairs.
//  - cell: piecewise-constant density on disjoint intervals (a uniform grid
//    is the common case, but cells may be non-contiguous, e.g. a union of
//    short intervals).
class DiscreteMeasure {
 public:
  struct Atom {
    double location;
    double weight;
    int group;
  };
  struct Cell {
    double lo;
    double hi;
    double density;
  };

  // Atomic measure; atom i gets group i. Weights must be >= 0 and sum to
  // 1 within 1e-12.
  static DiscreteMeasure from_atoms(const std::vector<std::pair<double, double>>& atoms);
  static DiscreteMeasure from_atoms_grouped(std::vector<Atom> atoms);

  // Uniform grid on [a, b] with density values at the m >= 2 nodes;
  // trapezoid mass must be 1 within 1e-8. Stored as m-1 cells with the
  // node-average density, which preserves the trapezoid mass exactly.
  static DiscreteMeasure from_grid(double a, double b, const std::vector<double>& node_values);

  // Piecewise-constant density on sorted, non-overlapping cells with total
  // mass 1 within 1e-8.
  static DiscreteMeasure from_cells(std::vector<Cell> cells);

  // num_cells equal-width cells on [a, b] whose masses are exact increments
  // of the given distribution function, normalized by cdf(b) - cdf(a).
  static DiscreteMeasure from_cdf(const std::function<double(double)>& cdf, double a,
                                  double b, int num_cells);

  bool atomic() const noexcept { return !atoms_.empty(); }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  double mass() const;
  // Integral of |x|^p.
  double abs_moment(double p) const;
  // Pushforward under x -> a*x, a > 0.
  DiscreteMeasure scaled(double a) const;

 private:
  DiscreteMeasure() = default;

  std::vector<Atom> atoms_;
  std::vector<Cell> cells_;
};

}  // namespace schatten
