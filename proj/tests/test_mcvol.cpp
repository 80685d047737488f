#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "schatten/asymptotics.hpp"
#include "schatten/linalg.hpp"
#include "schatten/mcvol.hpp"
#include "schatten/special.hpp"

using namespace schatten;

TEST_CASE("euclidean ball sampler stays in the ball") {
  RngStream rng(1, 0);
  for (int i = 0; i < 2000; ++i) {
    Matrix m = sample_uniform_euclidean_ball(3, i % 2 ? Field::Real : Field::Complex, rng);
    CHECK(schatten_norm(m, PExponent(2.0)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("euclidean ball sampler radius law") {
  // For a uniform draw, ||X||_2^dim is uniform on [0,1]: mean 1/2.
  RngStream rng(2, 0);
  const int n = 3;
  const double dim = n * n;
  const int reps = 100000;
  double acc = 0.0;
  for (int i = 0; i < reps; ++i) {
    Matrix m = sample_uniform_euclidean_ball(n, Field::Real, rng);
    acc += std::pow(schatten_norm(m, PExponent(2.0)), dim);
  }
  acc /= reps;
  // sd of U[0,1] is 1/sqrt(12); 4 sigma band
  CHECK(std::fabs(acc - 0.5) < 4.0 / std::sqrt(12.0 * reps));
}

TEST_CASE("euclidean ball log volume") {
  CHECK(euclidean_ball_log_volume(1) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(euclidean_ball_log_volume(2) == doctest::Approx(std::log(kPi)).epsilon(1e-14));
  CHECK(euclidean_ball_log_volume(3) ==
        doctest::Approx(std::log(4.0 * kPi / 3.0)).epsilon(1e-14));
}

TEST_CASE("volume ratio mc: n=1 is exact for every order") {
  for (double p : {0.5, 1.0, 3.0}) {
    for (Field f : {Field::Real, Field::Complex}) {
      Estimate e = volume_ratio_mc(1, PExponent(p), f, 1000, 7, 1);
      CHECK(e.value == 1.0);
      CHECK(e.std_error == 0.0);
      CHECK_FALSE(e.degenerate);
    }
  }
  Estimate einf = volume_ratio_mc(1, PExponent::infinity(), Field::Real, 1000, 7, 1);
  CHECK(einf.value == 1.0);
}

TEST_CASE("volume ratio mc: order 2 is the whole ball") {
  Estimate e = volume_ratio_mc(3, PExponent(2.0), Field::Real, 5000, 11, 1);
  CHECK(e.value == 1.0);
  CHECK(e.std_error == 0.0);
}

TEST_CASE("volume ratio mc matches the chamber oracle at n=2") {
  // light version of the acceptance sweep: two cells, 2e5 samples
  struct Row {
    double p;
    Field field;
  };
  for (const Row& r : {Row{1.0, Field::Real}, Row{3.0, Field::Complex}}) {
    Estimate e = volume_ratio_mc(2, PExponent(r.p), r.field, 200000, 13, 1);
    const double oracle = singular_value_quadrature(2, PExponent(r.p), r.field);
    CHECK(std::fabs(e.value - oracle) < 3.0 * e.std_error);
  }
}

TEST_CASE("volume ratio mc is monotone in the order") {
  // B_p grows with p, so the ratio to the Euclidean ball does too.
  Estimate lo = volume_ratio_mc(2, PExponent(1.0), Field::Real, 200000, 17, 1);
  Estimate hi = volume_ratio_mc(2, PExponent(1.5), Field::Real, 200000, 18, 1);
  CHECK(lo.value < hi.value + 3.0 * (lo.std_error + hi.std_error));
}

TEST_CASE("volume ratio mc reproducibility and metadata") {
  Estimate a = volume_ratio_mc(2, PExponent(1.5), Field::Complex, 50000, 29, 2);
  Estimate b = volume_ratio_mc(2, PExponent(1.5), Field::Complex, 50000, 29, 2);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.samples == 50000);
  CHECK(a.seed == 29);
}

TEST_CASE("volume ratio mc flags degenerate runs") {
  // a tiny quasi-norm ball: no hits expected at this sample size
  Estimate e = volume_ratio_mc(2, PExponent(0.05), Field::Complex, 1000, 3, 1);
  CHECK(e.degenerate);
  CHECK(e.value == 0.0);
}

TEST_CASE("volume ratio mc argument validation") {
  CHECK_THROWS_AS((void)volume_ratio_mc(0, PExponent(1.0), Field::Real, 5000, 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)volume_ratio_mc(2, PExponent(1.0), Field::Real, 999, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("chamber quadrature anchors at n=2") {
  CHECK(singular_value_quadrature(2, PExponent(2.0), Field::Real) == 1.0);
  CHECK(singular_value_quadrature(2, PExponent(2.0), Field::Complex) == 1.0);
  CHECK(singular_value_quadrature(2, PExponent(1.0), Field::Real) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(singular_value_quadrature(2, PExponent(1.0), Field::Complex) ==
        doctest::Approx(0.2).epsilon(1e-9));
  CHECK(singular_value_quadrature(2, PExponent::infinity(), Field::Real) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(singular_value_quadrature(2, PExponent::infinity(), Field::Complex) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(singular_value_quadrature(2, PExponent(1.5), Field::Real) ==
        doctest::Approx(0.81587368).epsilon(1e-6));
  CHECK(singular_value_quadrature(2, PExponent(3.0), Field::Real) ==
        doctest::Approx(1.17480210).epsilon(1e-6));
  CHECK(singular_value_quadrature(2, PExponent(1.5), Field::Complex) ==
        doctest::Approx(0.61683731).epsilon(1e-6));
  CHECK(singular_value_quadrature(2, PExponent(3.0), Field::Complex) ==
        doctest::Approx(1.48003350).epsilon(1e-6));
}

TEST_CASE("chamber quadrature anchors at n=3") {
  CHECK(singular_value_quadrature(3, PExponent(2.0), Field::Real) == 1.0);
  CHECK(singular_value_quadrature(3, PExponent(1.0), Field::Real) ==
        doctest::Approx(0.044921875).epsilon(2e-5));
  CHECK(singular_value_quadrature(3, PExponent::infinity(), Field::Real) ==
        doctest::Approx(5.25).epsilon(1e-8));
}

TEST_CASE("chamber quadrature argument validation") {
  CHECK_THROWS_AS((void)singular_value_quadrature(4, PExponent(1.0), Field::Real),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)singular_value_quadrature(1, PExponent(1.0), Field::Real),
                  std::invalid_argument);
}

TEST_CASE("radius convergence table") {
  auto rows =
      radius_convergence_table(PExponent(1.0), Field::Real, {1, 2}, 200000, 23, 1);
  REQUIRE(rows.size() == 2);
  // dimension-1 ball of unit trace norm is [-1, 1]: measured radius exactly 2
  CHECK(rows[0].n == 1);
  CHECK(rows[0].dim == 1);
  CHECK(rows[0].measured_radius == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rows[0].predicted_radius == doctest::Approx(5.055724868306407).epsilon(1e-12));
  CHECK(rows[0].ratio == doctest::Approx(2.0 / 5.055724868306407).epsilon(1e-12));
  // n=2 drifts toward the asymptote
  CHECK(rows[1].ratio > rows[0].ratio);
  CHECK(rows[1].ratio < 1.0);

  CHECK_THROWS_AS(
      (void)radius_convergence_table(PExponent(1.0), Field::Real, {1, 5}, 200000, 23, 1),
      std::invalid_argument);
}
