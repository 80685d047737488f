#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "schatten/linalg.hpp"
#include "schatten/matrix.hpp"
#include "schatten/rng.hpp"

using namespace schatten;

namespace {

Matrix random_matrix(int n, Field field, RngStream& rng) {
  Matrix a(n, field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (field == Field::Real)
        a.set(i, j, rng.normal());
      else
        a.set(i, j, rng.normal(), rng.normal());
    }
  return a;
}

// Product of random Givens rotations: an orthogonal matrix without needing a
// QR factorization.
Matrix random_orthogonal(int n, RngStream& rng) {
  Matrix q = Matrix::identity(n, Field::Real);
  for (int rep = 0; rep < 3 * n; ++rep) {
    const int i = static_cast<int>(rng.uniform() * n);
    int j = static_cast<int>(rng.uniform() * n);
    if (i == j) j = (j + 1) % n;
    const double th = rng.uniform(0.0, 2.0 * kPi);
    Matrix g = Matrix::identity(n, Field::Real);
    g.set(i, i, std::cos(th));
    g.set(j, j, std::cos(th));
    g.set(i, j, -std::sin(th));
    g.set(j, i, std::sin(th));
    q = q.multiply(g);
  }
  return q;
}

// Complex unitary diag(e^{i phi}) * (real orthogonal) -- enough variety for
// invariance checks without a Gram-Schmidt pass.
Matrix random_unitary(int n, RngStream& rng) {
  Matrix q0 = random_orthogonal(n, rng);
  Matrix u(n, Field::Complex);
  for (int i = 0; i < n; ++i) {
    const double phi = rng.uniform(0.0, 2.0 * kPi);
    for (int j = 0; j < n; ++j) {
      const double v = q0.re(i, j);
      u.set(i, j, v * std::cos(phi), v * std::sin(phi));
    }
  }
  return u;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("singular values of simple matrices") {
  Matrix id3 = Matrix::identity(3, Field::Real);
  auto s = singular_values(id3).values;
  REQUIRE(s.size() == 3);
  for (double v : s) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  Matrix d(2, Field::Real);
  d.set(0, 0, 3.0);
  d.set(1, 1, -4.0);
  auto sd = singular_values(d).values;
  CHECK(sd[0] == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(sd[1] == doctest::Approx(3.0).epsilon(1e-14));

  Matrix z(4, Field::Real);
  for (double v : singular_values(z).values) CHECK(v == 0.0);
}

TEST_CASE("singular values match the transpose") {
  RngStream rng(101, 0);
  Matrix a = random_matrix(5, Field::Real, rng);
  auto s1 = singular_values(a).values;
  auto s2 = singular_values(a.conjugate_transpose()).values;
  CHECK(max_abs_diff(s1, s2) < 1e-12);
}

TEST_CASE("singular values are invariant under orthogonal factors") {
  RngStream rng(7, 2);
  for (int n : {2, 5, 16}) {
    Matrix a = random_matrix(n, Field::Real, rng);
    Matrix q = random_orthogonal(n, rng);
    auto s = singular_values(a).values;
    auto sq = singular_values(q.multiply(a)).values;
    auto sa = singular_values(a.multiply(q)).values;
    CHECK(max_abs_diff(s, sq) < 1e-10);
    CHECK(max_abs_diff(s, sa) < 1e-10);
  }
}

TEST_CASE("complex singular values via known hermitian spectrum") {
  // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
  Matrix c(2, Field::Complex);
  c.set(0, 0, 2.0);
  c.set(0, 1, 0.0, 1.0);
  c.set(1, 0, 0.0, -1.0);
  c.set(1, 1, 2.0);
  auto s = singular_values(c).values;
  REQUIRE(s.size() == 2);
  CHECK(s[0] == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(schatten_norm(c, PExponent(1.0)) == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("complex singular values are invariant under unitary factors") {
  RngStream rng(13, 4);
  for (int n : {2, 4, 8}) {
    Matrix a = random_matrix(n, Field::Complex, rng);
    Matrix u = random_unitary(n, rng);
    auto s = singular_values(a).values;
    auto su = singular_values(u.multiply(a)).values;
    CHECK(max_abs_diff(s, su) < 1e-10);
  }
}

TEST_CASE("singular values vs characteristic polynomial at n=2") {
  // For A = [[a, b], [c, d]], the squared singular values solve
  // x^2 - (|a|^2+..)x + det(A^T A) = 0.
  RngStream rng(55, 1);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix a = random_matrix(2, Field::Real, rng);
    const double fro2 = a.re(0, 0) * a.re(0, 0) + a.re(0, 1) * a.re(0, 1) +
                        a.re(1, 0) * a.re(1, 0) + a.re(1, 1) * a.re(1, 1);
    const double det = a.re(0, 0) * a.re(1, 1) - a.re(0, 1) * a.re(1, 0);
    const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
    const double hi = std::sqrt(0.5 * (fro2 + disc));
    const double lo = std::sqrt(std::max(0.0, 0.5 * (fro2 - disc)));
    auto s = singular_values(a).values;
    CHECK(s[0] == doctest::Approx(hi).epsilon(1e-12));
    CHECK(s[1] == doctest::Approx(lo).epsilon(1e-10));
  }
}

TEST_CASE("schatten norm anchors") {
  Matrix d(2, Field::Real);
  d.set(0, 0, 3.0);
  d.set(1, 1, 4.0);
  CHECK(schatten_norm(d, PExponent(1.0)) == doctest::Approx(7.0).epsilon(1e-14));
  CHECK(schatten_norm(d, PExponent(2.0)) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(schatten_norm(d, PExponent::infinity()) == doctest::Approx(4.0).epsilon(1e-14));
  // quasi-norm regime: (3^0.5 + 4^0.5)^2
  const double want = std::pow(std::sqrt(3.0) + std::sqrt(4.0), 2.0);
  CHECK(schatten_norm(d, PExponent(0.5)) == doctest::Approx(want).epsilon(1e-13));
  CHECK(schatten_norm(Matrix(3, Field::Real), PExponent(1.0)) == 0.0);
}

TEST_CASE("schatten norm ordering in p and homogeneity") {
  RngStream rng(99, 9);
  Matrix a = random_matrix(6, Field::Real, rng);
  const std::vector<double> ps = {0.5, 1.0, 1.5, 2.0, 3.0, 10.0};
  double prev = schatten_norm(a, PExponent(ps[0]));
  for (size_t i = 1; i < ps.size(); ++i) {
    const double cur = schatten_norm(a, PExponent(ps[i]));
    CHECK(cur <= prev * (1.0 + 1e-13));  // non-increasing in p
    prev = cur;
  }
  CHECK(schatten_norm(a, PExponent::infinity()) <= prev * (1.0 + 1e-13));

  const double n1 = schatten_norm(a, PExponent(1.5));
  Matrix b = a.scaled({-2.5, 0.0});
  CHECK(schatten_norm(b, PExponent(1.5)) == doctest::Approx(2.5 * n1).epsilon(1e-13));
}

TEST_CASE("triangle inequality for p >= 1 on random pairs") {
  RngStream rng(31, 7);
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    for (int rep = 0; rep < 10; ++rep) {
      Matrix a = random_matrix(4, Field::Real, rng);
      Matrix b = random_matrix(4, Field::Real, rng);
      const double lhs = schatten_norm(a.add(b), PExponent(p));
      const double rhs =
          schatten_norm(a, PExponent(p)) + schatten_norm(b, PExponent(p));
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
  for (int rep = 0; rep < 10; ++rep) {
    Matrix a = random_matrix(4, Field::Real, rng);
    Matrix b = random_matrix(4, Field::Real, rng);
    const double lhs = schatten_norm(a.add(b), PExponent::infinity());
    const double rhs = schatten_norm(a, PExponent::infinity()) +
                       schatten_norm(b, PExponent::infinity());
    CHECK(lhs <= rhs * (1.0 + 1e-12));
  }
}

TEST_CASE("in_ball at and around the boundary") {
  Matrix d(2, Field::Real);
  d.set(0, 0, 0.6);
  d.set(1, 1, 0.8);
  CHECK(in_ball(d, PExponent(2.0)));        // norm exactly 1
  CHECK_FALSE(in_ball(d, PExponent(1.0)));  // norm 1.4

  Matrix half = Matrix::identity(3, Field::Real).scaled({0.5, 0.0});
  CHECK(in_ball(half, PExponent::infinity()));
  CHECK_FALSE(in_ball(Matrix::identity(3, Field::Real), PExponent(1.0)));
}

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(Matrix(0, Field::Real), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(65, Field::Real), std::invalid_argument);
  Matrix r(2, Field::Real);
  CHECK_THROWS_AS(r.set(0, 0, 1.0, 0.5), std::invalid_argument);  // imaginary on Real
  Matrix nan(2, Field::Real);
  nan.set(0, 0, std::nan(""));
  CHECK_FALSE(nan.all_finite());
  CHECK_THROWS_AS((void)singular_values(nan), std::invalid_argument);
}
