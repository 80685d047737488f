#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "schatten/asymptotics.hpp"
#include "schatten/rng.hpp"

using namespace schatten;

TEST_CASE("delta closed-form anchors") {
  CHECK(delta(PExponent(1.0)) == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
  CHECK(delta(PExponent::infinity()) == 0.25);
  CHECK(delta(PExponent(2.0)) == doctest::Approx(0.4496408417513669).epsilon(1e-13));
  // quarter order: pi^2 / (4 e)
  CHECK(delta(PExponent(0.5)) ==
        doctest::Approx(kPi * kPi / (4.0 * std::exp(1.0))).epsilon(1e-13));
}

TEST_CASE("log delta equals the variational supremum") {
  for (double p : {0.5, 1.0, 2.0, 4.0, 8.0, 50.0}) {
    CHECK(sup_J(p) == doctest::Approx(std::log(delta(PExponent(p)))).epsilon(1e-13));
  }
}

TEST_CASE("delta approaches 1/4 for large order") {
  // (log p)/p rate: the gap is (log(2 sqrt(pi p) / sqrt(e)))/(4p) + O(1/p^2)
  for (double p : {1e3, 1e6}) {
    const double gap = delta(PExponent(p)) - 0.25;
    const double rate = std::log(2.0 * std::sqrt(kPi * p) / std::sqrt(std::exp(1.0))) /
                        (4.0 * p);
    CHECK(gap > 0.0);
    CHECK(gap == doctest::Approx(rate).epsilon(1e-3));
  }
}

TEST_CASE("volume radius asymptote anchors") {
  // order 2 (Real): the ball is Euclidean of dimension n^2 and the
  // prediction is sqrt(2 pi e) / n.
  for (int n : {1, 10, 50}) {
    VolumeAsymptote va = volume_radius_asymptote(n, PExponent(2.0), Field::Real);
    CHECK(va.radius * n ==
          doctest::Approx(std::sqrt(2.0 * kPi * std::exp(1.0))).epsilon(1e-12));
    CHECK(va.dim == static_cast<long long>(n) * n);
  }
  // infinite order (Real): n^{-1/2} sqrt(2 pi e^{3/2} / 4)
  VolumeAsymptote vi = volume_radius_asymptote(4, PExponent::infinity(), Field::Real);
  CHECK(vi.radius ==
        doctest::Approx(0.5 * std::sqrt(2.0 * kPi * std::exp(1.5)) / 2.0).epsilon(1e-12));
  // complex halves the constant under the square root and doubles dim
  VolumeAsymptote vr = volume_radius_asymptote(3, PExponent(1.0), Field::Real);
  VolumeAsymptote vc = volume_radius_asymptote(3, PExponent(1.0), Field::Complex);
  CHECK(vc.radius == doctest::Approx(vr.radius / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(vc.dim == 2 * vr.dim);
}

TEST_CASE("operator norm between the order-2 and order-p balls") {
  CHECK(op_norm_2_to_p(4, PExponent(1.0)) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(op_norm_2_to_p(9, PExponent(1.5)) ==
        doctest::Approx(std::pow(9.0, 1.0 / 1.5 - 0.5)).epsilon(1e-14));
  CHECK(op_norm_2_to_p(7, PExponent(3.0)) == 1.0);
  CHECK(op_norm_2_to_p(7, PExponent(2.0)) == 1.0);
  CHECK(op_norm_2_to_p(7, PExponent::infinity()) == 1.0);
  CHECK(op_norm_2_to_p(1, PExponent(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS((void)op_norm_2_to_p(4, PExponent(0.9)), std::invalid_argument);
}

TEST_CASE("volume ratio asymptote anchors") {
  // order 2: John ellipsoid is the body itself
  CHECK(volume_ratio_asymptote(5, PExponent(2.0), Field::Real).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  // order 1: pi / (2 e^{1/4}), which must sit below the classical
  // finite-dimensional bound 2 / e^{1/4}.
  const double v1 = volume_ratio_asymptote(3, PExponent(1.0), Field::Real).value;
  CHECK(v1 == doctest::Approx(kPi / (2.0 * std::exp(0.25))).epsilon(1e-12));
  CHECK(v1 == doctest::Approx(1.2233374093535518).epsilon(1e-12));
  CHECK(v1 <= 2.0 / std::exp(0.25));
  // n-independent below order 2
  CHECK(volume_ratio_asymptote(50, PExponent(1.0), Field::Real).value ==
        doctest::Approx(v1).epsilon(1e-14));
  // at infinite order the growing regime: n^{1/2} sqrt(delta(inf)/delta(1))
  const double vinf4 = volume_ratio_asymptote(4, PExponent::infinity(), Field::Real).value;
  CHECK(vinf4 == doctest::Approx(std::exp(0.25)).epsilon(1e-12));
  // field tag does not change the value
  CHECK(volume_ratio_asymptote(6, PExponent(1.3), Field::Complex).value ==
        doctest::Approx(volume_ratio_asymptote(6, PExponent(1.3), Field::Real).value)
            .epsilon(1e-15));
}

TEST_CASE("volume ratio two-regime continuity at order 2") {
  for (int n : {2, 17}) {
    const double below = volume_ratio_asymptote(n, PExponent(2.0 - 1e-9), Field::Real).value;
    const double at = volume_ratio_asymptote(n, PExponent(2.0), Field::Real).value;
    const double above = volume_ratio_asymptote(n, PExponent(2.0 + 1e-9), Field::Real).value;
    CHECK(std::fabs(below - at) < 1e-7);
    CHECK(std::fabs(above - at) < 1e-7);
  }
}

TEST_CASE("volume ratio gamma form agrees") {
  RngStream rng(3, 3);
  for (int rep = 0; rep < 40; ++rep) {
    const double p = std::exp(rng.uniform(0.0, 4.0));  // in [1, e^4]
    const int n = 1 + static_cast<int>(rng.uniform() * 30);
    VolumeRatioAsymptote vr = volume_ratio_asymptote(n, PExponent(std::max(1.0, p)),
                                                     Field::Real);
    CHECK(vr.gamma_form ==
          doctest::Approx(vr.value).epsilon(1e-12));
  }
  VolumeRatioAsymptote vi = volume_ratio_asymptote(9, PExponent::infinity(), Field::Real);
  CHECK(vi.gamma_form == doctest::Approx(vi.value).epsilon(1e-12));
}

TEST_CASE("volume ratio rejects sub-norm orders") {
  CHECK_THROWS_AS((void)volume_ratio_asymptote(3, PExponent(0.7), Field::Real),
                  std::invalid_argument);
}
