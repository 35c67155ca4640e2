#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/errors.hpp"
#include "radspec/numerics.hpp"
#include "support/adaptive_quad.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace radspec;
using numerics::Polynomial;

namespace {

Polynomial from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(c);
}

}  // namespace

TEST_CASE("gamma_fn at known points") {
  CHECK(numerics::gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(numerics::gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(numerics::gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK_THROWS_AS(numerics::gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(numerics::gamma_fn(-1.5), DomainError);
}

TEST_CASE("gamma_fn satisfies Gamma(x+1) = x Gamma(x)") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(0.05, 40.0);
  for (int t = 0; t < 500; ++t) {
    const double x = dist(rng);
    const double lhs = numerics::gamma_fn(x + 1.0);
    const double rhs = x * numerics::gamma_fn(x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("Polynomial evaluation and derivative") {
  Polynomial p({1.0, -3.0, 0.0, 2.0, 0.0});
  p.normalize();
  CHECK(p.degree() == 3);
  CHECK(p(2.0) == doctest::Approx(11.0));
  auto [v, d] = p.value_and_derivative(2.0);
  CHECK(v == doctest::Approx(11.0));
  CHECK(d == doctest::Approx(21.0));
  CHECK(p.derivative()(2.0) == doctest::Approx(21.0));
  CHECK(p.infinity_norm() == 3.0);
}

TEST_CASE("real_roots examples") {
  SUBCASE("beta^2 - 2") {
    const auto r = numerics::real_roots(Polynomial({-2.0, 0.0, 1.0}));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.roots[1] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("beta^3 - 12 beta") {
    const auto r = numerics::real_roots(Polynomial({0.0, -12.0, 0.0, 1.0}));
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0] == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(std::abs(r.roots[1]) < 1e-14);
    CHECK(r.roots[2] == doctest::Approx(-2.0 * std::sqrt(3.0)).epsilon(1e-15));
  }
  SUBCASE("beta^2 + 1 has no real roots") {
    const auto r = numerics::real_roots(Polynomial({1.0, 0.0, 1.0}));
    CHECK(r.roots.empty());
    CHECK(r.degree == 2);
  }
  SUBCASE("degree zero is rejected") {
    CHECK_THROWS_AS(numerics::real_roots(Polynomial({3.0})), InvalidInput);
  }
}

TEST_CASE("real_roots residuals on random real-rooted polynomials") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> roots(deg(rng));
    for (auto& r : roots) r = dist(rng);
    const Polynomial p = from_roots(roots);
    const auto found = numerics::real_roots(p);
    // Close clusters may turn into complex pairs; everything reported must be a root.
    for (double x : found.roots) {
      CHECK(std::abs(p(x)) <= 1e-10 * p.infinity_norm() * std::pow(1.0 + std::abs(x), p.degree()));
    }
    CHECK(std::is_sorted(found.roots.rbegin(), found.roots.rend()));
  }
}

TEST_CASE("real_roots recovers well separated roots") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int t = 0; t < 100; ++t) {
    const int n = deg(rng);
    std::vector<double> roots;
    for (int k = 0; k < n; ++k) roots.push_back(-6.0 + k + 0.3 * std::uniform_real_distribution<>(0, 1)(rng));
    const auto found = numerics::real_roots(from_roots(roots));
    REQUIRE(found.roots.size() == roots.size());
    std::sort(roots.rbegin(), roots.rend());
    for (int k = 0; k < n; ++k) CHECK(found.roots[k] == doctest::Approx(roots[k]).epsilon(1e-9));
  }
}

TEST_CASE("sym_eig examples") {
  CHECK(numerics::sym_eig(Eigen::MatrixXd::Identity(3, 3)).values.isApprox(Eigen::Vector3d(1, 1, 1)));
  const Eigen::MatrixXd d = Eigen::Vector3d(10, 2, 6).asDiagonal();
  const auto e = numerics::sym_eig(d);
  CHECK(e.values(0) == doctest::Approx(2.0));
  CHECK(e.values(1) == doctest::Approx(6.0));
  CHECK(e.values(2) == doctest::Approx(10.0));
  Eigen::Matrix2d x;
  x << 0, 1, 1, 0;
  const auto ex = numerics::sym_eig(x);
  CHECK(ex.values(0) == doctest::Approx(-1.0));
  CHECK(ex.values(1) == doctest::Approx(1.0));
  Eigen::Matrix2d bad;
  bad << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(numerics::sym_eig(bad), InvalidInput);
}

TEST_CASE("sym_eig shift invariance and orthonormal vectors") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> dist;
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = dist(rng);
    a = (a + a.transpose()).eval();
    const double sigma = dist(rng) * 3.0;
    const auto e0 = numerics::sym_eig(a);
    const auto e1 = numerics::sym_eig(a + sigma * Eigen::MatrixXd::Identity(n, n));
    const double scale = std::max(1.0, a.norm());
    for (int k = 0; k < n; ++k) CHECK(std::abs(e1.values(k) - e0.values(k) - sigma) <= 1e-12 * scale);
    CHECK((e0.vectors.transpose() * e0.vectors - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12);
    CHECK((a * e0.vectors - e0.vectors * e0.values.asDiagonal()).norm() <= 1e-12 * scale * n);
  }
}

TEST_CASE("tridiag_lowest_eigs examples") {
  const std::vector<double> d1{2, 2}, e1{0};
  const auto r1 = numerics::tridiag_lowest_eigs(d1, e1, 2);
  CHECK(r1[0] == doctest::Approx(2.0));
  CHECK(r1[1] == doctest::Approx(2.0));
  const std::vector<double> d2{0, 0}, e2{1};
  const auto r2 = numerics::tridiag_lowest_eigs(d2, e2, 2);
  CHECK(r2[0] == doctest::Approx(-1.0));
  CHECK(r2[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(numerics::tridiag_lowest_eigs(d2, e2, 3), InvalidInput);
}

TEST_CASE("tridiag_lowest_eigs on the discrete Laplacian") {
  const int M = 100;
  const double h = 1.0 / (M + 1);
  std::vector<double> d(M, 2.0 / (h * h)), e(M - 1, -1.0 / (h * h));
  const auto w = numerics::tridiag_lowest_eigs(d, e, 10);
  for (int j = 1; j <= 10; ++j) {
    const double s = std::sin(j * std::numbers::pi / (2.0 * (M + 1)));
    const double exact = 4.0 * s * s / (h * h);
    CHECK(w[j - 1] == doctest::Approx(exact).epsilon(1e-12));
  }
  CHECK(numerics::sturm_count(d, e, w[4] + 1e-6) == 5);
}

TEST_CASE("adaptive quadrature oracle") {
  using testing::adaptive_quad;
  CHECK(adaptive_quad([](double x) { return x * std::exp(-x * x); }) == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(adaptive_quad([](double x) { return x * x * std::exp(-x * x); }) ==
        doctest::Approx(std::sqrt(std::numbers::pi) / 4.0).epsilon(1e-13));
  CHECK(adaptive_quad([](double x) { return std::pow(x, 5) * std::exp(-x * x); }) ==
        doctest::Approx(1.0).epsilon(1e-13));
}
