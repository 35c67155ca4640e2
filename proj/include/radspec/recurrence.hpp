#pragma once

#include "radspec/numerics.hpp"

#include <span>
#include <vector>

// Power-series solutions G = xi^gamma exp(-xi^2/2) sum_j a_j xi^j of the
// reduced radial equation, and the polynomial solutions obtained when the
// series terminates.
namespace radspec::recurrence {

/// Coefficients a_0..a_J of the three-term recurrence
///   a_{j+2} = [beta a_{j+1} + (2j - kappa) a_j] / [(j+2)(2 gamma + j + 2)],
/// with a_{-1} = 0, a_0 = 1 and kappa = W - 2 gamma - 2.
struct RecurrenceState {
  double gamma = 0.0;
  double beta = 0.0;
  double kappa = 0.0;
  std::vector<double> coeffs;
};

RecurrenceState advance_recurrence(double gamma, double beta, double kappa, int J);

/// a_{n+1} at kappa = 2n, viewed as a polynomial of degree n+1 in beta.
struct TruncationPolynomialInBeta {
  int n = 0;
  double gamma = 0.0;
  numerics::Polynomial coeffs_in_beta;
  bool exact = false;  // built with exact rational arithmetic
};

TruncationPolynomialInBeta truncation_polynomial(int n, double gamma);

/// One polynomial eigenfunction xi^gamma P(xi) exp(-xi^2/2) of the potential
/// beta_root/xi + xi^2, with eigenvalue W = 2(n + gamma + 1).
struct TruncationSolution {
  int n = 0;
  int i = 0;  // 1-based, roots sorted strictly decreasing
  double gamma = 0.0;
  double beta_root = 0.0;
  std::vector<double> poly_coeffs;  // a_0..a_n
  double W_exact = 0.0;
  int node_count = 0;
};

/// All n+1 truncation roots for (n, gamma), Newton-polished on the recurrence.
/// Throws InternalConsistency if a root is not real, not simple, or fails the
/// residual check |a_{n+1}|, |a_{n+2}| < 1e-10.
std::vector<TruncationSolution> truncation_roots(int n, double gamma);

/// Number of sign changes of P on (0, inf), i.e. positive real roots of odd
/// multiplicity.
int count_nodes(std::span<const double> poly_coeffs);

}  // namespace radspec::recurrence
