#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/errors.hpp"
#include "radspec/recurrence.hpp"
#include "radspec/variational.hpp"
#include "support/adaptive_quad.hpp"

#include <cmath>
#include <numbers>

using namespace radspec;
using namespace radspec::variational;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrtPi = std::sqrt(std::numbers::pi);

BasisSpec raw(double gamma, int n) { return {gamma, n, BasisKind::RawMonomial}; }
BasisSpec ortho(double gamma, int n) { return {gamma, n, BasisKind::OrthonormalOscillator}; }

double u(double gamma, int i, double x) { return std::pow(x, gamma + i) * std::exp(-x * x / 2); }
double du(double gamma, int i, double x) { return ((gamma + i) / x - x) * u(gamma, i, x); }

void check_golden(double beta, const std::vector<double>& expected) {
  const auto r = solve_spectrum(0.0, beta, 4, BasisSpec{});
  for (int j = 0; j < 4; ++j) {
    CAPTURE(beta);
    CAPTURE(j);
    CHECK(std::abs(r.eigenvalues[j] - expected[j]) <= 1e-6);
  }
}

}  // namespace

TEST_CASE("basis kind names") {
  CHECK(to_string(BasisKind::RawMonomial) == "raw-monomial");
  CHECK(basis_kind_from_string("orthonormal") == BasisKind::OrthonormalOscillator);
  CHECK(basis_kind_from_string("raw-monomial") == BasisKind::RawMonomial);
  CHECK_THROWS_AS(basis_kind_from_string("laguerre"), InvalidInput);
}

TEST_CASE("moment and Gram examples") {
  CHECK(moment(1.0) == doctest::Approx(0.5 * std::tgamma(1.5)).epsilon(1e-14));
  CHECK(gram_matrix(raw(0, 1))(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gram_matrix(raw(0, 2))(0, 1) == doctest::Approx(kSqrtPi / 4).epsilon(1e-15));
  CHECK(gram_matrix(raw(1, 1))(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gram_matrix(ortho(1.3, 12)).isIdentity(0.0));
}

TEST_CASE("single-function Rayleigh quotients") {
  auto rq = [](double gamma, double beta) {
    return hamiltonian_matrix(raw(gamma, 1), beta)(0, 0) / gram_matrix(raw(gamma, 1))(0, 0);
  };
  CHECK(rq(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(rq(1, 0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(rq(0, 1) == doctest::Approx(2.0 + kSqrtPi).epsilon(1e-14));
}

TEST_CASE("raw matrix elements agree with adaptive quadrature") {
  using testing::adaptive_quad;
  for (double gamma : {0.0, 0.5, 1.0, 2.3}) {
    const int n = 6;
    const double beta = 0.7;
    const auto S = gram_matrix(raw(gamma, n));
    const auto H = hamiltonian_matrix(raw(gamma, n), beta);
    const auto M = inverse_xi_matrix(raw(gamma, n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CAPTURE(gamma);
        CAPTURE(i);
        CAPTURE(j);
        const double s = adaptive_quad([&](double x) { return u(gamma, i, x) * u(gamma, j, x) * x; });
        const double m = adaptive_quad([&](double x) { return u(gamma, i, x) * u(gamma, j, x); });
        const double h = adaptive_quad([&](double x) {
          const double pot = (gamma == 0.0 ? 0.0 : gamma * gamma / (x * x)) + beta / x + x * x;
          return (du(gamma, i, x) * du(gamma, j, x) + pot * u(gamma, i, x) * u(gamma, j, x)) * x;
        });
        CHECK(S(i, j) == doctest::Approx(s).epsilon(1e-10));
        CHECK(M(i, j) == doctest::Approx(m).epsilon(1e-10));
        CHECK(H(i, j) == doctest::Approx(h).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("matrices are symmetric and H = K + beta M") {
  for (auto kind : {BasisKind::RawMonomial, BasisKind::OrthonormalOscillator}) {
    const BasisSpec spec{0.5, 10, kind};
    const RitzBasis b(spec);
    const auto H = hamiltonian_matrix(spec, -1.3);
    CHECK((H - H.transpose()).norm() == 0.0);
    CHECK((b.hamiltonian(-1.3) - H).norm() <= 1e-12 * H.norm());
    CHECK((b.beta_independent() + 2.0 * b.inverse_xi() - b.hamiltonian(2.0)).norm() <= 1e-12 * H.norm());
  }
}

TEST_CASE("orthonormal basis starts with the oscillator ground state") {
  for (double gamma : {0.0, 1.0, 2.5}) {
    const auto K = hamiltonian_matrix(ortho(gamma, 30), 0.0);
    CHECK(K(0, 0) == doctest::Approx(2.0 * (gamma + 1)).epsilon(1e-12));
    for (int j = 1; j < 30; ++j) CHECK(std::abs(K(0, j)) < 1e-11);
  }
}

TEST_CASE("raw and orthonormal kinds give the same eigenvalues") {
  int compared = 0;
  for (double gamma : {0.0, 1.0}) {
    for (int n = 1; n <= 20; ++n) {
      for (double beta : {-kSqrt2, 1.0}) {
        const int states = std::min(n, 4);
        try {
          const auto r = solve_spectrum(gamma, beta, states, raw(gamma, n), 0);
          const auto o = solve_spectrum(gamma, beta, states, ortho(gamma, n), 0);
          for (int j = 0; j < states; ++j) {
            CAPTURE(n);
            CHECK(std::abs(r.eigenvalues[j] - o.eigenvalues[j]) <= 1e-9 * std::max(1.0, std::abs(o.eigenvalues[j])));
          }
          ++compared;
        } catch (const BasisTooLarge&) {
          CHECK(n > 10);
        }
      }
    }
  }
  CHECK(compared >= 40);
}

TEST_CASE("raw kind reports conditioning breakdown") {
  CHECK_THROWS_AS(RitzBasis(raw(0, 26)), BasisTooLarge);
  CHECK_THROWS_AS(solve_spectrum(0, 1, 4, raw(0, 25)), BasisTooLarge);
  CHECK_THROWS_AS(RitzBasis(ortho(0, 101)), BasisTooLarge);
}

TEST_CASE("solve_spectrum: exact oscillator") {
  for (double gamma : {0.0, 1.0, 2.0}) {
    const auto r = solve_spectrum(gamma, 0.0, 4, BasisSpec{gamma});
    for (int j = 0; j < 4; ++j) CHECK(std::abs(r.eigenvalues[j] - 2.0 * (2 * j + gamma + 1)) <= 1e-10);
  }
}

TEST_CASE("solve_spectrum: published spectra") {
  check_golden(kSqrt2, {4, 7.693978891, 11.50604238, 15.37592718});
  check_golden(-kSqrt2, {-1.459587134, 4, 8.344349427, 12.53290130});
  check_golden(-1.0, {-0.2085695649, 4.601041510, 8.834509671, 12.96513798});
  check_golden(1.0, {3.496523196, 7.236061810, 11.08720729, 14.98768617});
}

TEST_CASE("solve_spectrum: result fields") {
  const auto r = solve_spectrum(0, 1, 4, BasisSpec{});
  CHECK(r.basis_size == kDefaultBasisSize);
  CHECK(r.kind == BasisKind::OrthonormalOscillator);
  REQUIRE(r.convergence.size() == 4);
  for (double c : r.convergence) CHECK(c < 1e-9);
  const auto no_probe = solve_spectrum(0, 1, 4, BasisSpec{}, 0);
  CHECK(std::isnan(no_probe.convergence[0]));
  CHECK_THROWS_AS(solve_spectrum(0, 1, 50, BasisSpec{0.0, 40}), InvalidInput);
  CHECK_THROWS_AS(solve_spectrum(-1, 1, 4, BasisSpec{-1.0}), InvalidParameter);
}

TEST_CASE("Ritz upper bound: W_j(N) is non-increasing in N") {
  for (double beta : {-kSqrt2, 1.0, 3.0}) {
    const RitzBasis b(ortho(0, 40));
    std::vector<double> prev(4, INFINITY);
    for (int n : {10, 20, 30, 40}) {
      const auto w = lowest_eigenvalues(b, beta, 4, n);
      for (int j = 0; j < 4; ++j) {
        CHECK(w[j] <= prev[j] + 1e-12 * b.hamiltonian(beta).norm());
        prev[j] = w[j];
      }
    }
  }
}

TEST_CASE("<1/xi> expectation") {
  const RitzBasis b(ortho(0, 40));
  const auto r0 = solve_spectrum(b, 0.0, 4);
  CHECK(r0.inv_xi[0] == doctest::Approx(kSqrtPi).epsilon(1e-12));
  for (double beta : {-3.0, -1.0, 0.5, 2.0}) {
    for (double v : solve_spectrum(b, beta, 4).inv_xi) CHECK(v > 0.0);
  }

  const auto r = solve_spectrum(b, kSqrt2, 4);
  const double h = 1e-4;
  const auto up = solve_spectrum(b, kSqrt2 + h, 4, 0);
  const auto dn = solve_spectrum(b, kSqrt2 - h, 4, 0);
  for (int j = 0; j < 4; ++j) {
    CHECK(std::abs((up.eigenvalues[j] - dn.eigenvalues[j]) / (2 * h) - r.inv_xi[j]) < 1e-5);
  }

  const Eigen::VectorXd c = r.eigenvector_coeffs.col(0);
  const auto normalised = expectation_inv_xi(c, b);
  CHECK_FALSE(normalised.normalized_internally);
  const auto scaled = expectation_inv_xi(3.0 * c, b);
  CHECK(scaled.normalized_internally);
  CHECK(scaled.value == doctest::Approx(normalised.value).epsilon(1e-13));
}

TEST_CASE("<1/xi> of the oscillator ground state by quadrature") {
  using testing::adaptive_quad;
  for (double gamma : {0.0, 1.0, 2.0}) {
    const double num = adaptive_quad([&](double x) { return u(gamma, 0, x) * u(gamma, 0, x); });
    const double den = adaptive_quad([&](double x) { return u(gamma, 0, x) * u(gamma, 0, x) * x; });
    const auto r = solve_spectrum(gamma, 0.0, 1, BasisSpec{gamma});
    CHECK(r.inv_xi[0] == doctest::Approx(num / den).epsilon(1e-11));
  }
}

TEST_CASE("truncation eigenvalue appears at index node_count") {
  for (double gamma : {0.0, 1.0, 2.0}) {
    const RitzBasis b(ortho(gamma, 40));
    for (int n = 0; n <= 4; ++n) {
      for (const auto& s : recurrence::truncation_roots(n, gamma)) {
        const auto r = solve_spectrum(b, s.beta_root, n + 3);
        CHECK(std::abs(r.eigenvalues[s.node_count] - s.W_exact) < 1e-7);
      }
    }
  }
}

TEST_CASE("at nonzero truncation roots no other eigenvalue lies on the truncation lattice") {
  for (double gamma : {0.0, 1.0, 2.0}) {
    const RitzBasis b(ortho(gamma, 40));
    for (int n = 1; n <= 4; ++n) {
      for (const auto& s : recurrence::truncation_roots(n, gamma)) {
        if (s.beta_root == 0.0) continue;
        const auto r = solve_spectrum(b, s.beta_root, n + 3);
        for (int j = 0; j < n + 3; ++j) {
          if (j == s.node_count) continue;
          const double x = r.eigenvalues[j] / 2 - gamma - 1;
          CHECK(std::abs(x - std::max(0.0, std::round(x))) * 2 > 0.01);
        }
      }
    }
  }
}

TEST_CASE("at the beta = 0 root every eigenvalue lies on the truncation lattice") {
  for (double gamma : {0.0, 1.0, 2.0}) {
    const auto r = solve_spectrum(gamma, 0.0, 7, BasisSpec{gamma});
    for (int j = 0; j < 7; ++j) {
      const double x = r.eigenvalues[j] / 2 - gamma - 1;
      CHECK(std::abs(x - std::round(x)) < 1e-9);
    }
  }
}
