#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace schatten {

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Rule of the given order (>= 1), computed once and cached. Thread-safe.
const GaussLegendreRule& gauss_legendre(int order);

template <typename F>
double integrate_rule(F&& f, double a, double b, const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return sum * half;
}

// Adaptive bisection with a GL-15 panel; a panel is accepted when halving it
// changes the value by less than the local error budget. Handles integrable
// endpoint singularities because panel width underflows before the recursion
// depth cap (56) is reached.
template <typename F>
double adaptive_integrate(F&& f, double a, double b, double abs_tol,
                          double rel_tol = 1e-12) {
  const GaussLegendreRule& rule = gauss_legendre(15);
  struct Frame {
    double a, b, whole, tol;
    int depth;
  };
  const double whole0 = integrate_rule(f, a, b, rule);
  std::vector<Frame> stack;
  stack.push_back({a, b, whole0, abs_tol, 0});
  double total = 0.0;
  double running_scale = std::abs(whole0);
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    const double m = 0.5 * (fr.a + fr.b);
    if (m <= fr.a || m >= fr.b || fr.depth >= 56) {
      total += fr.whole;
      continue;
    }
    const double left = integrate_rule(f, fr.a, m, rule);
    const double right = integrate_rule(f, m, fr.b, rule);
    const double err = std::abs(left + right - fr.whole);
    if (err <= fr.tol || err <= rel_tol * running_scale) {
      total += left + right;
      continue;
    }
    stack.push_back({fr.a, m, left, 0.5 * fr.tol, fr.depth + 1});
    stack.push_back({m, fr.b, right, 0.5 * fr.tol, fr.depth + 1});
    running_scale = std::max(running_scale, std::abs(total));
  }
  return total;
}

}  // namespace schatten
