#include "radspec/oracle.hpp"

#include "radspec/errors.hpp"
#include "radspec/numerics.hpp"
#include "radspec/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace radspec::oracle {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

Tridiagonal discretise(double gamma, double beta, double L, int M) {
  const double h = L / M;
  const double inv_h2 = 1.0 / (h * h);
  Tridiagonal t;
  t.diag.resize(M);
  t.off.resize(M - 1);
  for (int i = 0; i < M; ++i) {
    const double xi = (i + 0.5) * h;
    t.diag[i] = 2.0 * inv_h2 + gamma * gamma / (xi * xi) + beta / xi + xi * xi;
    if (i + 1 < M) {
      const double face = (i + 1.0) * h;
      const double next = (i + 1.5) * h;
      t.off[i] = -face * inv_h2 / std::sqrt(xi * next);
    }
  }
  return t;
}

// One eigenvector by inverse iteration (Thomas algorithm on T - lambda I).
std::vector<double> eigenvector(const Tridiagonal& t, double lambda) {
  const std::size_t n = t.diag.size();
  const double tiny = 1e-300;
  std::vector<double> x(n, 1.0), c(n), d(n);
  for (int sweep = 0; sweep < 3; ++sweep) {
    // forward elimination
    double denom = t.diag[0] - lambda;
    if (denom == 0.0) denom = tiny;
    c[0] = n > 1 ? t.off[0] / denom : 0.0;
    d[0] = x[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = t.diag[i] - lambda - t.off[i - 1] * c[i - 1];
      if (denom == 0.0) denom = tiny;
      c[i] = i + 1 < n ? t.off[i] / denom : 0.0;
      d[i] = (x[i] - t.off[i - 1] * d[i - 1]) / denom;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
    double norm = 0.0;
    for (double v : x) norm = std::max(norm, std::abs(v));
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    for (double& v : x) v /= norm;
  }
  return x;
}

std::vector<double> solve_grid(double gamma, double beta, int k, double L, int M,
                               std::vector<std::string>* warnings) {
  const auto t = discretise(gamma, beta, L, M);
  auto w = numerics::tridiag_lowest_eigs(t.diag, t.off, k);
  if (warnings != nullptr) {
    for (int j = 0; j < k; ++j) {
      const auto u = eigenvector(t, w[j]);
      double peak = 0.0;
      for (double v : u) peak = std::max(peak, std::abs(v));
      const double edge = std::abs(u.back());
      if (edge > 1e-8 * peak) {
        std::ostringstream msg;
        msg << "state " << j << ": amplitude at xi_max = " << L << " is " << edge / peak
            << " of its peak; increase xi_max";
        warnings->push_back(msg.str());
      }
    }
  }
  return w;
}

}  // namespace

FdSpectrum fd_spectrum(double gamma, double beta, int num_states, const GridSpec& grid) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidParameter("gamma must be finite and non-negative");
  }
  if (!std::isfinite(beta)) throw InvalidParameter("beta must be finite");
  if (!(grid.xi_max >= 8.0)) throw InvalidInput("grid xi_max must be at least 8");
  if (grid.num_points < 100) throw InvalidInput("grid needs at least 100 points");
  if (num_states < 1 || num_states > grid.num_points / 10) {
    throw InvalidInput("num_states must be between 1 and num_points / 10");
  }

  FdSpectrum out;
  const auto coarse = solve_grid(gamma, beta, num_states, grid.xi_max, grid.num_points,
                                 grid.richardson ? nullptr : &out.warnings);
  if (!grid.richardson) {
    out.eigenvalues = coarse;
    return out;
  }
  const auto fine =
      solve_grid(gamma, beta, num_states, grid.xi_max, 2 * grid.num_points, &out.warnings);
  out.eigenvalues.resize(num_states);
  for (int j = 0; j < num_states; ++j) {
    out.eigenvalues[j] = (4.0 * fine[j] - coarse[j]) / 3.0;
  }
  return out;
}

CrossValidationReport cross_validate(double gamma, double beta, int num_states) {
  const variational::BasisSpec basis{gamma, variational::kDefaultBasisSize,
                                     variational::BasisKind::OrthonormalOscillator};
  const auto ritz = variational::solve_spectrum(gamma, beta, num_states, basis);
  const auto fd = fd_spectrum(gamma, beta, num_states);

  CrossValidationReport r;
  r.gamma = gamma;
  r.beta = beta;
  r.warnings = fd.warnings;
  for (int j = 0; j < num_states; ++j) {
    r.states.push_back(j);
    r.w_variational.push_back(ritz.eigenvalues[j]);
    r.w_fd.push_back(fd.eigenvalues[j]);
    const double diff = std::abs(ritz.eigenvalues[j] - fd.eigenvalues[j]);
    r.abs_diff.push_back(diff);
    if (!(diff <= kCrossValidationTolerance)) r.flagged.push_back(j);
  }
  return r;
}

}  // namespace radspec::oracle
