#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "schatten/quadrature.hpp"
#include "schatten/rng.hpp"
#include "schatten/special.hpp"
#include "schatten/ullman.hpp"

using namespace schatten;

TEST_CASE("density reduces to the semicircle at p=2") {
  UllmanDist u(2.0);
  for (double x = -0.999; x <= 0.999; x += 0.037) {
    const double want = (2.0 / kPi) * std::sqrt(1.0 - x * x);
    CHECK(u.density(x) == doctest::Approx(want).epsilon(1e-12));
  }
  CHECK(u.density(0.0) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
}

TEST_CASE("density closed form at p=1") {
  // (1/pi) log((1 + sqrt(1-x^2)) / |x|)
  UllmanDist u(1.0);
  for (double x = 0.01; x <= 0.99; x += 0.014) {
    const double want = std::log((1.0 + std::sqrt(1.0 - x * x)) / x) / kPi;
    CHECK(u.density(x) == doctest::Approx(want).epsilon(1e-9));
    CHECK(u.density(-x) == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("density at the origin and the edge") {
  CHECK(UllmanDist(3.0).density(0.0) == doctest::Approx(3.0 / (2.0 * kPi)).epsilon(1e-13));
  CHECK(UllmanDist(1.5).density(0.0) == doctest::Approx(3.0 / kPi).epsilon(1e-13));
  CHECK(std::isinf(UllmanDist(1.0).density(0.0)));
  CHECK(std::isinf(UllmanDist(0.5).density(0.0)));
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    UllmanDist u(p);
    CHECK(u.density(1.0) == 0.0);
    CHECK(u.density(-1.0) == 0.0);
    CHECK(u.density(1.7) == 0.0);
    CHECK(u.density(-2.0) == 0.0);
  }
}

TEST_CASE("density integrates to one") {
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    UllmanDist u(p);
    // split at 0: the density can blow up there for p <= 1
    const double mass = adaptive_integrate([&](double x) { return u.density(x); }, -1.0, 0.0,
                                           1e-10) +
                        adaptive_integrate([&](double x) { return u.density(x); }, 0.0, 1.0,
                                           1e-10);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("cdf anchors and symmetry") {
  UllmanDist u(2.0);
  CHECK(u.cdf(-1.0) == 0.0);
  CHECK(u.cdf(1.0) == 1.0);
  CHECK(u.cdf(-1.5) == 0.0);
  CHECK(u.cdf(2.0) == 1.0);
  CHECK(u.cdf(0.0) == doctest::Approx(0.5).epsilon(1e-13));
  // semicircle cdf at 0.5: 1/2 + x sqrt(1-x^2)*2/pi/... closed form below
  const double x = 0.5;
  const double semi = 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / kPi;
  CHECK(u.cdf(0.5) == doctest::Approx(semi).epsilon(1e-12));
  CHECK(u.cdf(0.5) == doctest::Approx(0.8044988905221147).epsilon(1e-12));
  for (double p : {0.5, 1.0, 4.0}) {
    UllmanDist up(p);
    for (double t : {0.1, 0.35, 0.8}) {
      CHECK(up.cdf(-t) == doctest::Approx(1.0 - up.cdf(t)).epsilon(1e-11));
    }
  }
}

TEST_CASE("cdf is the integral of the density") {
  for (double p : {0.7, 1.0, 2.0, 4.0}) {
    UllmanDist u(p);
    for (double x : {-0.6, -0.2, 0.3, 0.9}) {
      const double direct = adaptive_integrate([&](double t) { return u.density(t); }, x, 1.0,
                                               1e-11);
      CHECK(1.0 - u.cdf(x) == doctest::Approx(direct).epsilon(1e-8));
    }
  }
}

TEST_CASE("cdf is monotone") {
  for (double p : {0.5, 2.0, 6.0}) {
    UllmanDist u(p);
    double prev = 0.0;
    for (double x = -1.0; x <= 1.0; x += 0.01) {
      const double c = u.cdf(x);
      CHECK(c >= prev - 1e-14);
      prev = c;
    }
  }
}

TEST_CASE("quantile inverts the cdf") {
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    UllmanDist u(p);
    for (double x = -0.99; x <= 0.99; x += 0.03) {
      const double q = u.cdf(x);
      if (q <= 0.0 || q >= 1.0) continue;
      CHECK(u.quantile(q) == doctest::Approx(x).epsilon(1e-7));
    }
    CHECK(u.quantile(0.5) == doctest::Approx(0.0).epsilon(1e-9));
  }
  UllmanDist u2(2.0);
  CHECK_THROWS_AS((void)u2.quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)u2.quantile(1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)u2.quantile(-0.1), std::invalid_argument);
}

TEST_CASE("absolute p-th moment closed form") {
  // Gamma((p+1)/2) / (2 sqrt(pi) Gamma((p+2)/2)) * 2 ... equals:
  CHECK(UllmanDist(2.0).abs_moment() == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(UllmanDist(1.0).abs_moment() == doctest::Approx(1.0 / kPi).epsilon(1e-13));
  CHECK(UllmanDist(4.0).abs_moment() == doctest::Approx(3.0 / 16.0).epsilon(1e-13));
  CHECK(UllmanDist(0.5).abs_moment() == doctest::Approx(0.3813798817517041).epsilon(1e-12));
  // cross-check against direct quadrature of |x|^p h_p(x)
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    UllmanDist u(p);
    const double quad = 2.0 * adaptive_integrate(
                                  [&](double x) { return std::pow(x, p) * u.density(x); },
                                  0.0, 1.0, 1e-11);
    CHECK(u.abs_moment() == doctest::Approx(quad).epsilon(1e-8));
  }
}

TEST_CASE("expected log distance closed form") {
  CHECK(UllmanDist(1.0).log_distance_expectation() ==
        doctest::Approx(-std::log(2.0) - 0.5).epsilon(1e-14));
  CHECK(UllmanDist(2.0).log_distance_expectation() ==
        doctest::Approx(-std::log(2.0) - 0.25).epsilon(1e-14));
  CHECK(UllmanDist(8.0).log_distance_expectation() ==
        doctest::Approx(-std::log(2.0) - 0.0625).epsilon(1e-14));
}

TEST_CASE("sampler determinism and support") {
  UllmanDist u(1.5);
  RngStream a(3, 0);
  RngStream b(3, 0);
  bool equal = true;
  for (int i = 0; i < 1000; ++i) equal = equal && (u.sample(a) == u.sample(b));
  CHECK(equal);
  RngStream r(5, 1);
  for (int i = 0; i < 10000; ++i) {
    const double x = u.sample(r);
    CHECK(std::fabs(x) <= 1.0);
  }
}

TEST_CASE("sampler moments match the law") {
  for (double p : {0.5, 2.0}) {
    UllmanDist u(p);
    RngStream r(17, 2);
    const int n = 100000;
    double m1 = 0.0, mp = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = u.sample(r);
      m1 += x;
      mp += std::pow(std::fabs(x), p);
    }
    m1 /= n;
    mp /= n;
    CHECK(std::fabs(m1) < 3.0 / std::sqrt(double(n)));  // symmetric law
    // exact |x|^p moment with a generous 5 sigma band (variance <= 1)
    CHECK(std::fabs(mp - u.abs_moment()) < 5.0 / std::sqrt(double(n)));
  }
}

TEST_CASE("sampler alternate-form identity at p=2") {
  // At p=2 the law is the semicircle; E x^2 = 1/4.
  UllmanDist u(2.0);
  RngStream r(23, 0);
  const int n = 100000;
  double m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = u.sample(r);
    m2 += x * x;
  }
  CHECK(m2 / n == doctest::Approx(0.25).epsilon(0.02));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(UllmanDist(0.0), std::invalid_argument);
  CHECK_THROWS_AS(UllmanDist(-2.0), std::invalid_argument);
  CHECK_THROWS_AS(UllmanDist(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}
