#include "schatten/fekete.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "schatten/parallel.hpp"
#include "schatten/rng.hpp"
#include "schatten/ullman.hpp"

namespace schatten {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kGolden = 0.6180339887498949;

double objective_raw(const std::vector<double>& t, double p) {
  const int n = static_cast<int>(t.size());
  double logs = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = std::abs(t[i] - t[j]);
      if (d == 0.0) return kNegInf;
      logs += std::log(d);
    }
  }
  double mean = 0.0;
  for (double x : t) mean += std::pow(x, p);
  mean /= n;
  return 2.0 / (static_cast<double>(n) * (n - 1)) * logs - std::log(mean) / p;
}

void rescale(std::vector<double>& t, double p) {
  double mean = 0.0;
  for (double x : t) mean += std::pow(x, p);
  mean /= t.size();
  const double c = std::pow(mean, -1.0 / p);
  for (double& x : t) x *= c;
}

// Maximize a unimodal f on [lo, hi] to x-resolution xtol; evaluations stay
// strictly interior, so -inf walls at the ends are fine.
template <typename F>
double golden_max(F&& f, double lo, double hi, double xtol) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && (b - a) > xtol; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

struct Candidate {
  std::vector<double> t;
  double value = kNegInf;
  int rounds = 0;
  bool converged = false;
};

Candidate run_single(std::vector<double> t, double p, const MaximizeOptions& opts) {
  const int n = static_cast<int>(t.size());
  const int first = opts.pin_first ? 1 : 0;
  const double pair_coeff = 2.0 / (static_cast<double>(n) * (n - 1));

  rescale(t, p);
  double value = objective_raw(t, p);
  Candidate cand;
  cand.converged = false;

  std::vector<double> grad(n), dir(n), trial(n);
  int round = 0;
  for (; round < opts.max_iters; ++round) {
    // Coordinate sweep: each t_k moves inside (t_{k-1}, t_{k+1}), the last
    // one inside an expanded upper bracket.
    for (int k = first; k < n; ++k) {
      double sum_p_excl = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != k) sum_p_excl += std::pow(t[j], p);
      }
      auto coord_obj = [&](double x) {
        double logs = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j == k) continue;
          const double d = std::abs(x - t[j]);
          if (d == 0.0) return kNegInf;
          logs += std::log(d);
        }
        return pair_coeff * logs - std::log((sum_p_excl + std::pow(x, p)) / n) / p;
      };
      const double lo = k > 0 ? t[k - 1] : 0.0;
      double hi;
      if (k < n - 1) {
        hi = t[k + 1];
      } else {
        double offset = (n >= 2 ? t[k] - t[k - 1] : 1.0) + 1.0;
        hi = t[k] + offset;
        for (int grow = 0; grow < 40 && coord_obj(hi + offset) > coord_obj(hi); ++grow) {
          offset *= 2.0;
          hi += offset;
        }
      }
      const double x_best =
          golden_max(coord_obj, lo, hi, 1e-10 * (1.0 + std::abs(lo) + std::abs(hi)));
      if (coord_obj(x_best) > coord_obj(t[k])) t[k] = x_best;
    }
    rescale(t, p);

    // Gradient polish with an order-preserving step cap.
    for (int step = 0; step < 50; ++step) {
      double sum_p = 0.0;
      for (double x : t) sum_p += std::pow(x, p);
      double norm2 = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k < first || (t[k] == 0.0 && p < 1.0)) {
          grad[k] = 0.0;
          continue;
        }
        double interaction = 0.0;
        for (int j = 0; j < n; ++j) {
          if (j != k) interaction += 1.0 / (t[k] - t[j]);
        }
        grad[k] = pair_coeff * interaction - std::pow(t[k], p - 1.0) / sum_p;
        // Project onto the feasible cone: a coordinate sitting on the
        // boundary t_k = 0 must not be pushed negative.
        if (t[k] == 0.0 && grad[k] < 0.0) grad[k] = 0.0;
        norm2 += grad[k] * grad[k];
      }
      if (norm2 < 1e-30) break;
      const double inv_norm = 1.0 / std::sqrt(norm2);
      for (int k = 0; k < n; ++k) dir[k] = grad[k] * inv_norm;

      double alpha_max = 0.5 * (t[n - 1] + 1.0);
      for (int k = 0; k + 1 < n; ++k) {
        const double closing = dir[k] - dir[k + 1];
        if (closing > 0.0) alpha_max = std::min(alpha_max, 0.9 * (t[k + 1] - t[k]) / closing);
      }
      if (dir[first] < 0.0 && t[first] > 0.0) {
        alpha_max = std::min(alpha_max, 0.9 * t[first] / -dir[first]);
      }
      if (!(alpha_max > 0.0)) break;

      auto line_obj = [&](double alpha) {
        for (int k = 0; k < n; ++k) trial[k] = t[k] + alpha * dir[k];
        return objective_raw(trial, p);
      };
      const double alpha = golden_max(line_obj, 0.0, alpha_max, 1e-9 * alpha_max);
      if (line_obj(alpha) > objective_raw(t, p)) {
        for (int k = 0; k < n; ++k) t[k] += alpha * dir[k];
      } else {
        break;
      }
    }
    std::sort(t.begin(), t.end());
    rescale(t, p);

    const double new_value = objective_raw(t, p);
    const double gain = new_value - value;
    value = std::max(value, new_value);
    if (gain <= opts.tol) {
      cand.converged = true;
      break;
    }
  }
  cand.t = std::move(t);
  cand.value = value;
  cand.rounds = std::min(round + 1, opts.max_iters);
  return cand;
}

// Least squares for y ~ c0 + c1 u + c2 v via modified Gram-Schmidt.
bool lstsq3(const std::vector<double>& u, const std::vector<double>& v,
            const std::vector<double>& y, double out[3]) {
  const std::size_t m = y.size();
  if (m < 3) return false;
  std::vector<double> q0(m, 1.0), q1(u), q2(v);
  double r[3][3] = {};
  auto dot = [m](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += a[i] * b[i];
    return s;
  };
  std::vector<double>* cols[3] = {&q0, &q1, &q2};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < j; ++i) {
      r[i][j] = dot(*cols[i], *cols[j]);
      for (std::size_t k = 0; k < m; ++k) (*cols[j])[k] -= r[i][j] * (*cols[i])[k];
    }
    r[j][j] = std::sqrt(dot(*cols[j], *cols[j]));
    if (!(r[j][j] > 1e-300)) return false;
    for (std::size_t k = 0; k < m; ++k) (*cols[j])[k] /= r[j][j];
  }
  double rhs[3];
  for (int j = 0; j < 3; ++j) rhs[j] = dot(*cols[j], y);
  for (int j = 2; j >= 0; --j) {
    double s = rhs[j];
    for (int i = j + 1; i < 3; ++i) s -= r[j][i] * out[i];
    out[j] = s / r[j][j];
  }
  return true;
}

}  // namespace

double objective(const PointConfiguration& cfg, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("objective: requires finite p > 0");
  }
  if (cfg.size() < 2) throw std::invalid_argument("objective: needs n >= 2");
  if (cfg.points().back() == 0.0) {
    throw std::domain_error("objective: all-zero configuration");
  }
  return objective_raw(cfg.points(), p);
}

std::vector<double> quantile_initialization(int n, double p) {
  const UllmanDist half_order(2.0 * p);
  std::vector<double> t(n);
  t[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    // Quantile of |U| at q = (i + 1/2)/n, i.e. of U at (1 + q)/2.
    const double q = (static_cast<double>(i) + 0.5) / n;
    t[i] = std::sqrt(half_order.quantile(0.5 * (1.0 + q)));
  }
  return t;
}

FeketeSolution maximize(int n, double p, const MaximizeOptions& opts) {
  if (n < 2) throw std::invalid_argument("maximize: needs n >= 2");
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("maximize: requires finite p > 0");
  }
  if (opts.restarts < 1 || opts.max_iters < 1 || !(opts.tol > 0.0)) {
    throw std::invalid_argument("maximize: bad options");
  }

  const std::vector<double> init = quantile_initialization(n, p);
  const int first = opts.pin_first ? 1 : 0;

  Candidate best;
  int total_rounds = 0;
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> t = init;
    if (r > 0) {
      RngStream rng(opts.seed, (static_cast<std::uint64_t>(n) << 20) + static_cast<std::uint64_t>(r));
      for (int i = first; i < n; ++i) t[i] *= std::exp(0.25 * rng.normal());
      std::sort(t.begin(), t.end());
    }
    Candidate cand = run_single(std::move(t), p, opts);
    total_rounds += cand.rounds;
    if (cand.value > best.value) best = std::move(cand);
  }

  rescale(best.t, p);
  std::sort(best.t.begin(), best.t.end());
  FeketeSolution sol{n,
                     p,
                     PointConfiguration(best.t),
                     0.0,
                     0.0,
                     total_rounds,
                     best.converged};
  sol.log_delta_n = objective_raw(sol.points.points(), p);
  sol.delta_n = std::exp(sol.log_delta_n);
  return sol;
}

DeltaSequence delta_sequence(double p, int n_max, const MaximizeOptions& opts, int threads) {
  if (n_max < 3) throw std::invalid_argument("delta_sequence: needs n_max >= 3");
  const int count = n_max - 1;  // n = 2..n_max
  const int workers = std::max(1, std::min(threads, count));
  std::vector<DeltaSequenceRow> rows(count);
  run_workers(workers, [&](int w) {
    for (int i = w; i < count; i += workers) {
      const int n = i + 2;
      const FeketeSolution sol = maximize(n, p, opts);
      rows[i] = {n, sol.delta_n, sol.log_delta_n, sol.converged};
    }
  });

  DeltaSequence seq;
  seq.p = p;
  seq.rows = std::move(rows);
  seq.all_converged = true;
  for (const auto& row : seq.rows) seq.all_converged = seq.all_converged && row.converged;

  // Fit log delta_n ~ c0 + a (log n)/n + b/n over the top half of the range.
  std::vector<double> u, v, y;
  const int n_start = std::max(2, n_max / 2);
  for (const auto& row : seq.rows) {
    if (row.n < n_start) continue;
    const double n_d = row.n;
    u.push_back(std::log(n_d) / n_d);
    v.push_back(1.0 / n_d);
    y.push_back(row.log_delta_n);
  }
  double coeff[3];
  if (lstsq3(u, v, y, coeff)) {
    seq.extrapolated = std::exp(coeff[0]);
  } else {
    seq.extrapolated = seq.rows.back().delta_n;
  }
  return seq;
}

}  // namespace schatten
