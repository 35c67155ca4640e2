#pragma once

#include <string>
#include <vector>

// Finite-difference eigenvalues of the reduced radial equation, independent
// of both the Ritz basis and the power-series recurrence.
namespace radspec::oracle {

struct GridSpec {
  double xi_max = 12.0;   // L, >= 8
  int num_points = 6000;  // M cells of width h = L / M, >= 100
  bool richardson = true; // combine grids h and h/2 as (4 W_{h/2} - W_h) / 3
};

struct FdSpectrum {
  std::vector<double> eigenvalues;
  std::vector<std::string> warnings;  // domain-truncation diagnostics
};

/// Lowest eigenvalues of -(1/xi)(xi G')' + (gamma^2/xi^2 + beta/xi + xi^2) G = W G
/// on a cell-centred grid xi_i = (i + 1/2) h with G = 0 at xi = L. The flux
/// form is symmetrised with u_i = sqrt(xi_i) G_i, giving a symmetric
/// tridiagonal matrix solved by Sturm bisection. Second order in h.
FdSpectrum fd_spectrum(double gamma, double beta, int num_states, const GridSpec& grid = {});

inline constexpr double kCrossValidationTolerance = 5e-4;

struct CrossValidationReport {
  double gamma = 0.0;
  double beta = 0.0;
  std::vector<int> states;
  std::vector<double> w_variational;
  std::vector<double> w_fd;
  std::vector<double> abs_diff;
  std::vector<int> flagged;  // states with abs_diff above the tolerance
  std::vector<std::string> warnings;

  bool ok() const noexcept { return flagged.empty(); }
};

/// Runs the default Ritz solver and the default grid solver side by side.
CrossValidationReport cross_validate(double gamma, double beta, int num_states);

}  // namespace radspec::oracle
