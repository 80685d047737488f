#include "schatten/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schatten {

namespace {

constexpr double kRotationThreshold = 1e-14;
constexpr int kMaxSweeps = 64;

}  // namespace

void singular_values_inplace(double* a, int m, double* out) {
  // One-sided Jacobi: orthogonalize column pairs until every pair is
  // orthogonal relative to the column norms; the norms are then the
  // singular values.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (int i = 0; i < m - 1; ++i) {
      for (int j = i + 1; j < m; ++j) {
        double* ci = a + static_cast<std::size_t>(i) * m;
        double* cj = a + static_cast<std::size_t>(j) * m;
        double aii = 0.0, ajj = 0.0, aij = 0.0;
        for (int k = 0; k < m; ++k) {
          aii += ci[k] * ci[k];
          ajj += cj[k] * cj[k];
          aij += ci[k] * cj[k];
        }
        if (aii == 0.0 || ajj == 0.0) continue;
        if (std::abs(aij) <= kRotationThreshold * std::sqrt(aii * ajj)) continue;
        const double zeta = (ajj - aii) / (2.0 * aij);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (int k = 0; k < m; ++k) {
          const double vi = ci[k];
          const double vj = cj[k];
          ci[k] = cs * vi - sn * vj;
          cj[k] = sn * vi + cs * vj;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }
  for (int j = 0; j < m; ++j) {
    const double* cj = a + static_cast<std::size_t>(j) * m;
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += cj[k] * cj[k];
    out[j] = std::sqrt(s);
  }
  std::sort(out, out + m, std::greater<double>());
}

SingularSpectrum singular_values(const Matrix& a) {
  if (!a.all_finite()) {
    throw std::invalid_argument("singular_values: entries must be finite");
  }
  const int n = a.order();
  SingularSpectrum spec;
  if (a.field() == Field::Real) {
    std::vector<double> work(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) work[static_cast<std::size_t>(j) * n + i] = a.re(i, j);
    }
    spec.values.resize(n);
    singular_values_inplace(work.data(), n, spec.values.data());
    return spec;
  }
  // Real embedding of X + iY: [[X, -Y], [Y, X]] has each singular value of
  // the complex matrix twice; average adjacent entries of the sorted list.
  const int m = 2 * n;
  std::vector<double> work(static_cast<std::size_t>(m) * m);
  auto put = [&](int i, int j, double v) { work[static_cast<std::size_t>(j) * m + i] = v; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = a.re(i, j);
      const double y = a.im(i, j);
      put(i, j, x);
      put(i, n + j, -y);
      put(n + i, j, y);
      put(n + i, n + j, x);
    }
  }
  std::vector<double> doubled(m);
  singular_values_inplace(work.data(), m, doubled.data());
  spec.values.resize(n);
  for (int k = 0; k < n; ++k) spec.values[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
  return spec;
}

double schatten_norm(const Matrix& a, PExponent p) {
  const SingularSpectrum spec = singular_values(a);
  const double s_max = spec.values.front();
  if (s_max == 0.0) return 0.0;
  if (p.is_infinite()) return s_max;
  const double pv = p.value();
  double sum = 0.0;
  for (double s : spec.values) sum += std::pow(s / s_max, pv);
  return s_max * std::pow(sum, 1.0 / pv);
}

bool in_ball(const Matrix& a, PExponent p) { return schatten_norm(a, p) <= 1.0; }

}  // namespace schatten
