#pragma once

#include "schatten/measure.hpp"

namespace schatten {

// (2/(n(n-1))) sum_{i<j} log|t_i - t_j|; -inf on coincident points.
// Throws std::invalid_argument for n < 2.
double pairwise_log_energy(const PointConfiguration& cfg);

// Double log-kernel integral of a cell-form measure. Every cell pair,
// the diagonal included, uses the exact primitive
//   int_a1^b1 int_a2^b2 log|x-y| = H(b1-a2) + H(a1-b2) - H(a1-a2) - H(b1-b2),
//   H(u) = u^2 (2 log|u| - 3) / 4,
// so there is no quadrature error, only the piecewise-constant bias.
// Throws std::invalid_argument on atomic input (use pairwise_log_energy or
// J_functional, which handles atoms via the cross-pair sum).
double measure_log_energy(const DiscreteMeasure& mu);

// log-energy minus (1/p) log of the p-th absolute moment. Atomic measures
// use the weighted mean of log|x_i - x_j| over distinct-group pairs
// (self-interaction is -inf and is not part of the functional; dividing by
// the pair mass keeps the value scale invariant). For equal weights this
// atomic energy is exactly pairwise_log_energy. Throws std::domain_error
// when all mass sits at 0.
double J_functional(const DiscreteMeasure& mu, double p);

// Q_p(x) = (sqrt(pi) Gamma(p/2) / (2 Gamma((p+1)/2))) |x|^p.
double external_field(double p, double x);

// E_p(mu) = -measure_log_energy(mu) + 2 int Q_p dmu. Cell-form only.
double field_energy(const DiscreteMeasure& mu, double p);

// Pushforward of a measure on [0, inf) under v -> +-sqrt(v), signs fair.
// Atoms (t, w) map to (+-sqrt(t), w/2) keeping the source group; cell
// measures are re-gridded uniformly on [-sqrt(B), sqrt(B)] with exact cell
// masses taken from the input distribution function.
DiscreteMeasure symmetrize_sqrt(const DiscreteMeasure& mu);

// Uniform density 1/(n*eps) on [0, eps] and on [t_i - eps, t_i] for each
// further point: the interval smoothing of a configuration. Requires
// consecutive points separated by more than eps.
DiscreteMeasure smooth_configuration(const PointConfiguration& cfg, double eps);

}  // namespace schatten
