#include "schatten/mcvol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "schatten/asymptotics.hpp"
#include "schatten/parallel.hpp"
#include "schatten/quadrature.hpp"
#include "schatten/special.hpp"

namespace schatten {

namespace {

// Fills the column-major real working matrix (the complex case as its
// 2n x 2n embedding) with a uniform draw from `radius` times the Euclidean
// ball, consuming the stream in the documented order.
void draw_into(int n, Field field, double radius, RngStream& rng, double* work) {
  const int d = field == Field::Real ? n * n : 2 * n * n;
  const int m = field == Field::Real ? n : 2 * n;
  double norm2 = 0.0;
  if (field == Field::Real) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double g = rng.normal();
        work[static_cast<std::size_t>(j) * m + i] = g;
        norm2 += g * g;
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double x = rng.normal();
        const double y = rng.normal();
        norm2 += x * x + y * y;
        work[static_cast<std::size_t>(j) * m + i] = x;
        work[static_cast<std::size_t>(n + j) * m + i] = -y;
        work[static_cast<std::size_t>(j) * m + n + i] = y;
        work[static_cast<std::size_t>(n + j) * m + n + i] = x;
      }
    }
  }
  const double u = rng.uniform_open();
  const double factor = radius * std::pow(u, 1.0 / d) / std::sqrt(norm2);
  const std::size_t total = static_cast<std::size_t>(m) * m;
  for (std::size_t k = 0; k < total; ++k) work[k] *= factor;
}

double norm_from_singulars(const double* s, int count, PExponent p) {
  const double s_max = s[0];
  if (s_max == 0.0) return 0.0;
  if (p.is_infinite()) return s_max;
  const double pv = p.value();
  double sum = 0.0;
  for (int i = 0; i < count; ++i) sum += std::pow(s[i] / s_max, pv);
  return s_max * std::pow(sum, 1.0 / pv);
}

}  // namespace

Matrix sample_uniform_euclidean_ball(int n, Field field, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_uniform_euclidean_ball: needs n >= 1");
  const int d = field == Field::Real ? n * n : 2 * n * n;
  Matrix out(n, field);
  std::vector<double> re(static_cast<std::size_t>(n) * n);
  std::vector<double> im(field == Field::Complex ? re.size() : 0);
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = rng.normal();
      re[static_cast<std::size_t>(i) * n + j] = x;
      norm2 += x * x;
      if (field == Field::Complex) {
        const double y = rng.normal();
        im[static_cast<std::size_t>(i) * n + j] = y;
        norm2 += y * y;
      }
    }
  }
  const double u = rng.uniform_open();
  const double factor = std::pow(u, 1.0 / d) / std::sqrt(norm2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      out.set(i, j, re[k] * factor, field == Field::Complex ? im[k] * factor : 0.0);
    }
  }
  return out;
}

Estimate volume_ratio_mc(int n, PExponent p, Field field, long long samples,
                         std::uint64_t seed, int threads) {
  if (n < 1) throw std::invalid_argument("volume_ratio_mc: needs n >= 1");
  if (samples < 1000) throw std::invalid_argument("volume_ratio_mc: needs samples >= 1000");
  const int workers = std::max(1, threads);
  const long long d = field == Field::Real ? static_cast<long long>(n) * n
                                           : 2LL * n * n;
  const bool scaled_regime = p.is_infinite() ? true : p.value() > 2.0;
  const double radius =
      scaled_regime ? std::pow(static_cast<double>(n), 0.5 - p.inv()) : 1.0;

  const int m = field == Field::Real ? n : 2 * n;
  std::vector<long long> hits(workers, 0);
  const long long base = samples / workers;
  const long long rem = samples % workers;

  run_workers(workers, [&](int w) {
    RngStream rng(seed, static_cast<std::uint64_t>(w));
    const long long count = base + (w < rem ? 1 : 0);
    std::vector<double> work(static_cast<std::size_t>(m) * m);
    std::vector<double> sv(m);
    std::vector<double> averaged(n);
    long long local = 0;
    for (long long s = 0; s < count; ++s) {
      draw_into(n, field, radius, rng, work.data());
      singular_values_inplace(work.data(), m, sv.data());
      const double* vals;
      if (field == Field::Complex) {
        for (int k = 0; k < n; ++k) averaged[k] = 0.5 * (sv[2 * k] + sv[2 * k + 1]);
        vals = averaged.data();
      } else {
        vals = sv.data();
      }
      if (norm_from_singulars(vals, n, p) <= 1.0) ++local;
    }
    hits[w] = local;
  });

  long long total_hits = 0;
  for (int w = 0; w < workers; ++w) total_hits += hits[w];

  const double f = static_cast<double>(total_hits) / static_cast<double>(samples);
  const double factor = std::exp(static_cast<double>(d) * std::log(radius));
  Estimate est;
  est.value = factor * f;
  est.std_error = factor * std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  est.degenerate = total_hits == 0;
  return est;
}

namespace {

double cap_remaining(double budget, double pv) {
  // Largest s with s^p <= budget.
  if (budget <= 0.0) return 0.0;
  return std::pow(budget, 1.0 / pv);
}

// n = 2 chamber integral with the p-constraint; p may be infinite.
double chamber2(PExponent p, Field field) {
  const bool inf = p.is_infinite();
  const double pv = inf ? 0.0 : p.value();
  auto inner = [&](double s2) {
    // Upper s1 limit: ordering s1 <= s2 and the norm budget.
    double u = s2;
    if (!inf) u = std::min(u, cap_remaining(1.0 - std::pow(s2, pv), pv));
    if (u <= 0.0) return 0.0;
    if (field == Field::Real) return s2 * s2 * u - u * u * u / 3.0;
    const double a = s2 * s2;
    const double b = a - u * u;
    return s2 * (a * a * a - b * b * b) / 6.0;
  };
  double total = 0.0;
  const double kink = inf ? 1.0 : std::pow(0.5, 1.0 / pv);
  total += adaptive_integrate(inner, 0.0, kink, 1e-11, 1e-10);
  if (kink < 1.0) total += adaptive_integrate(inner, kink, 1.0, 1e-11, 1e-10);
  return total;
}

// n = 3: innermost s1 integral is polynomial (degree <= 9) and integrated
// exactly with an 8-point rule; s2 and s3 are adaptive with splits at the
// constraint kinks.
double chamber3(PExponent p, Field field) {
  const bool inf = p.is_infinite();
  const double pv = inf ? 0.0 : p.value();
  const GaussLegendreRule& gl = gauss_legendre(8);

  auto middle = [&](double s3) {
    const double a3 = s3 * s3;
    double s2_cap = s3;
    if (!inf) s2_cap = std::min(s2_cap, cap_remaining(1.0 - std::pow(s3, pv), pv));
    if (s2_cap <= 0.0) return 0.0;

    auto inner = [&](double s2) {
      double u = s2;
      if (!inf) {
        u = std::min(u, cap_remaining(1.0 - std::pow(s3, pv) - std::pow(s2, pv), pv));
      }
      if (u <= 0.0) return 0.0;
      const double a2 = s2 * s2;
      if (field == Field::Real) {
        const double w32 = a3 - a2;
        return w32 * integrate_rule(
                         [&](double s1) {
                           const double a1 = s1 * s1;
                           return (a2 - a1) * (a3 - a1);
                         },
                         0.0, u, gl);
      }
      const double w32 = (a3 - a2) * (a3 - a2);
      return w32 * s2 * s3 *
             integrate_rule(
                 [&](double s1) {
                   const double a1 = s1 * s1;
                   const double d2 = a2 - a1;
                   const double d3 = a3 - a1;
                   return d2 * d2 * d3 * d3 * s1;
                 },
                 0.0, u, gl);
    };

    double total = 0.0;
    double split = s2_cap;
    if (!inf) {
      // Kink where the ordering cap meets the norm budget: s2^p = (1-s3^p)/2.
      split = std::min(s2_cap, cap_remaining(0.5 * (1.0 - std::pow(s3, pv)), pv));
    }
    if (split > 0.0) total += adaptive_integrate(inner, 0.0, split, 1e-12, 1e-9);
    if (split < s2_cap) total += adaptive_integrate(inner, split, s2_cap, 1e-12, 1e-9);
    return total;
  };

  std::vector<double> splits = {0.0, 1.0};
  if (!inf) {
    splits.push_back(std::pow(1.0 / 2.0, 1.0 / pv));
    splits.push_back(std::pow(1.0 / 3.0, 1.0 / pv));
  }
  std::sort(splits.begin(), splits.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
    if (splits[i + 1] > splits[i]) {
      total += adaptive_integrate(middle, splits[i], splits[i + 1], 1e-11, 5e-8);
    }
  }
  return total;
}

}  // namespace

double singular_value_quadrature(int n, PExponent p, Field field) {
  if (n != 2 && n != 3) {
    throw std::invalid_argument("singular_value_quadrature: n must be 2 or 3");
  }
  const PExponent two(2.0);
  if (n == 2) return chamber2(p, field) / chamber2(two, field);
  return chamber3(p, field) / chamber3(two, field);
}

double euclidean_ball_log_volume(long long dim) {
  if (dim < 1) throw std::invalid_argument("euclidean_ball_log_volume: needs dim >= 1");
  const double half = 0.5 * static_cast<double>(dim);
  return half * std::log(kPi) - log_gamma(half + 1.0);
}

std::vector<RadiusRow> radius_convergence_table(PExponent p, Field field,
                                                const std::vector<int>& n_list,
                                                long long samples, std::uint64_t seed,
                                                int threads) {
  std::vector<RadiusRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    if (n < 1 || n > 4) {
      throw std::invalid_argument("radius_convergence_table: MC budget requires n <= 4");
    }
    const Estimate est = volume_ratio_mc(n, p, field, samples,
                                         seed + static_cast<std::uint64_t>(n), threads);
    const VolumeAsymptote pred = volume_radius_asymptote(n, p, field);
    double measured = 0.0;
    if (est.value > 0.0) {
      measured = std::exp((std::log(est.value) + euclidean_ball_log_volume(pred.dim)) /
                          static_cast<double>(pred.dim));
    }
    rows.push_back({n, pred.dim, measured, pred.radius,
                    pred.radius > 0.0 ? measured / pred.radius : 0.0, est});
  }
  return rows;
}

}  // namespace schatten
