#pragma once

namespace schatten {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 terms) with the
// reflection formula below x = 0.5. Relative accuracy ~1e-14 on (0, 1e6].
double log_gamma(double x);

}  // namespace schatten
