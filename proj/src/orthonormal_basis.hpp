#pragma once

#include <Eigen/Dense>

namespace radspec::variational::detail {

struct OrthonormalMatrices {
  Eigen::MatrixXd kinetic_harmonic;  // beta-independent part of H
  Eigen::MatrixXd inverse_xi;
  int working_digits = 0;
};

// Orthonormalises xi^(gamma+j) exp(-xi^2/2), j < size, by a Cholesky
// factorisation of the exact Gram matrix carried out in extended precision,
// and returns the Hamiltonian pieces in that basis rounded to double.
// Leading blocks correspond to the orthonormalised leading sub-basis.
OrthonormalMatrices build_orthonormal(double gamma, int size);

}  // namespace radspec::variational::detail
