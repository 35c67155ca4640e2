#pragma once

#include "radspec/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace radspec::testing {

// Adaptive Gauss-Kronrod 7/15 quadrature of f over (0, inf) for integrands
// with Gaussian decay. The tail beyond `cutoff` is below double precision for
// every integrand used in the tests (e^{-cutoff^2} with polynomial prefactor).
template <class F>
double adaptive_quad(F f, double abs_tol = 1e-11, double cutoff = 14.0, unsigned max_depth = 15) {
  double err = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, 0.0, cutoff, max_depth, 1e-14, &err);
  if (!std::isfinite(value) || err > abs_tol * std::max(1.0, std::abs(value))) {
    throw AccuracyError("adaptive quadrature did not converge: error estimate " +
                        std::to_string(err));
  }
  return value;
}

}  // namespace radspec::testing
