#include "radspec/variational.hpp"

#include "orthonormal_basis.hpp"
#include "radspec/errors.hpp"
#include "radspec/numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace radspec::variational {

namespace {

void check_spec(const BasisSpec& basis) {
  if (!(basis.gamma >= 0.0) || !std::isfinite(basis.gamma)) {
    throw InvalidParameter("gamma must be finite and non-negative, got " +
                           std::to_string(basis.gamma));
  }
  if (basis.size < 1) throw InvalidInput("basis size must be at least 1");
  if (basis.kind == BasisKind::RawMonomial && basis.size > kRawMaxSize) {
    throw BasisTooLarge("raw-monomial basis is capped at N = " + std::to_string(kRawMaxSize) +
                        " (Gram matrix too ill-conditioned); use the orthonormal kind");
  }
  if (basis.size > kOrthonormalMaxSize) {
    throw BasisTooLarge("basis size " + std::to_string(basis.size) + " exceeds the cap of " +
                        std::to_string(kOrthonormalMaxSize));
  }
}

// Closed-form raw-monomial matrices. P = 2 gamma + i + j.
Eigen::MatrixXd raw_overlap(double gamma, int n) {
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = moment(2.0 * gamma + i + j);
  return s;
}

Eigen::MatrixXd raw_kinetic_harmonic(double gamma, int n) {
  Eigen::MatrixXd k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double p = 2.0 * gamma + i + j;
      const double ai = gamma + i;
      const double aj = gamma + j;
      double v = 2.0 * moment(p + 2.0) - (ai + aj) * moment(p);
      const double centrifugal = ai * aj + gamma * gamma;
      if (centrifugal != 0.0) v += centrifugal * moment(p - 2.0);
      k(i, j) = v;
    }
  }
  return k;
}

Eigen::MatrixXd raw_inverse_xi(double gamma, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = moment(2.0 * gamma + i + j - 1.0);
  return m;
}

void check_finite(const Eigen::MatrixXd& a, const char* what) {
  if (!a.allFinite()) {
    throw MatrixElementError(std::string(what) + " has a non-finite matrix element");
  }
}

// Diagonally scaled Cholesky of an overlap matrix: D S D = L L^T.
struct ScaledCholesky {
  Eigen::VectorXd scale;  // D
  Eigen::MatrixXd lower;  // L
};

ScaledCholesky scaled_cholesky(const Eigen::MatrixXd& s) {
  ScaledCholesky out;
  out.scale = s.diagonal().cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd scaled = out.scale.asDiagonal() * s * out.scale.asDiagonal();
  Eigen::LLT<Eigen::MatrixXd> llt(scaled);
  if (llt.info() != Eigen::Success) {
    throw BasisTooLarge("Cholesky factorisation of the " + std::to_string(s.rows()) + "x" +
                        std::to_string(s.rows()) +
                        " raw-monomial Gram matrix broke down; use a smaller basis or the "
                        "orthonormal kind");
  }
  out.lower = llt.matrixL();
  // 1 / min pivot^2 ~ cond(D S D); computed pivots hit a rounding floor near 1e-11.
  const double min_pivot = out.lower.diagonal().cwiseAbs2().minCoeff();
  if (!(min_pivot > 1e-10)) {
    throw BasisTooLarge("raw-monomial Gram matrix of size " + std::to_string(s.rows()) +
                        " is numerically singular (pivot ratio " + std::to_string(min_pivot) +
                        "); use a smaller basis or the orthonormal kind");
  }
  return out;
}

struct Eigenpairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // S-orthonormal columns
};

Eigenpairs solve_block(const RitzBasis& basis, double beta, int size) {
  const Eigen::MatrixXd h = basis.hamiltonian(beta).topLeftCorner(size, size);
  if (basis.spec().kind == BasisKind::OrthonormalOscillator) {
    auto eig = numerics::sym_eig(h);
    return {std::move(eig.values), std::move(eig.vectors)};
  }
  const auto chol = scaled_cholesky(basis.overlap().topLeftCorner(size, size));
  const auto& L = chol.lower;
  const Eigen::MatrixXd hs = chol.scale.asDiagonal() * h * chol.scale.asDiagonal();
  Eigen::MatrixXd c = L.triangularView<Eigen::Lower>().solve(hs);
  c = L.triangularView<Eigen::Lower>().solve(c.transpose().eval());
  c = 0.5 * (c + c.transpose()).eval();
  auto eig = numerics::sym_eig(c);
  Eigen::MatrixXd vecs = L.transpose().triangularView<Eigen::Upper>().solve(eig.vectors);
  vecs = chol.scale.asDiagonal() * vecs;
  return {std::move(eig.values), std::move(vecs)};
}

void check_request(const RitzBasis& basis, double beta, int num_states) {
  if (!std::isfinite(beta)) throw InvalidParameter("beta must be finite");
  if (num_states < 1 || num_states > basis.size()) {
    throw InvalidInput("requested " + std::to_string(num_states) + " states from a basis of size " +
                       std::to_string(basis.size()));
  }
}

}  // namespace

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::RawMonomial:
      return "raw-monomial";
    case BasisKind::OrthonormalOscillator:
      return "orthonormal-oscillator";
  }
  return "unknown";
}

BasisKind basis_kind_from_string(std::string_view name) {
  if (name == "raw-monomial" || name == "raw") return BasisKind::RawMonomial;
  if (name == "orthonormal-oscillator" || name == "orthonormal") {
    return BasisKind::OrthonormalOscillator;
  }
  throw InvalidInput("unknown basis kind '" + std::string(name) + "'");
}

double moment(double p) { return 0.5 * numerics::gamma_fn(0.5 * (p + 2.0)); }

RitzBasis::RitzBasis(const BasisSpec& spec) : spec_(spec) {
  check_spec(spec_);
  const int n = spec_.size;
  if (spec_.kind == BasisKind::RawMonomial) {
    overlap_ = raw_overlap(spec_.gamma, n);
    kinetic_harmonic_ = raw_kinetic_harmonic(spec_.gamma, n);
    inverse_xi_ = raw_inverse_xi(spec_.gamma, n);
    scaled_cholesky(overlap_);
  } else {
    auto ortho = detail::build_orthonormal(spec_.gamma, n);
    overlap_ = Eigen::MatrixXd::Identity(n, n);
    kinetic_harmonic_ = std::move(ortho.kinetic_harmonic);
    inverse_xi_ = std::move(ortho.inverse_xi);
  }
  check_finite(kinetic_harmonic_, "Hamiltonian");
  check_finite(inverse_xi_, "1/xi moment matrix");
}

Eigen::MatrixXd RitzBasis::hamiltonian(double beta) const {
  Eigen::MatrixXd h = kinetic_harmonic_ + beta * inverse_xi_;
  check_finite(h, "Hamiltonian");
  return h;
}

Eigen::MatrixXd gram_matrix(const BasisSpec& basis) {
  check_spec(basis);
  if (basis.kind == BasisKind::OrthonormalOscillator) {
    return RitzBasis(basis).overlap();
  }
  Eigen::MatrixXd s = raw_overlap(basis.gamma, basis.size);
  scaled_cholesky(s);
  return s;
}

Eigen::MatrixXd hamiltonian_matrix(const BasisSpec& basis, double beta) {
  if (!std::isfinite(beta)) throw InvalidParameter("beta must be finite");
  check_spec(basis);
  if (basis.kind == BasisKind::RawMonomial) {
    Eigen::MatrixXd h = raw_kinetic_harmonic(basis.gamma, basis.size) +
                        beta * raw_inverse_xi(basis.gamma, basis.size);
    check_finite(h, "Hamiltonian");
    return h;
  }
  return RitzBasis(basis).hamiltonian(beta);
}

Eigen::MatrixXd inverse_xi_matrix(const BasisSpec& basis) {
  check_spec(basis);
  if (basis.kind == BasisKind::RawMonomial) return raw_inverse_xi(basis.gamma, basis.size);
  return RitzBasis(basis).inverse_xi();
}

std::vector<double> lowest_eigenvalues(const RitzBasis& basis, double beta, int num_states,
                                       int size) {
  if (size < num_states || size > basis.size()) {
    throw InvalidInput("lowest_eigenvalues: block size out of range");
  }
  check_request(basis, beta, num_states);
  const auto pairs = solve_block(basis, beta, size);
  return {pairs.values.data(), pairs.values.data() + num_states};
}

SpectrumResult solve_spectrum(const RitzBasis& basis, double beta, int num_states,
                              int probe_step) {
  check_request(basis, beta, num_states);
  const int n = basis.size();
  const auto pairs = solve_block(basis, beta, n);

  SpectrumResult out;
  out.gamma = basis.spec().gamma;
  out.beta = beta;
  out.kind = basis.spec().kind;
  out.basis_size = n;
  out.eigenvalues.assign(pairs.values.data(), pairs.values.data() + num_states);
  out.eigenvector_coeffs = pairs.vectors.leftCols(num_states);

  for (int j = 1; j < num_states; ++j) {
    if (!(out.eigenvalues[j] > out.eigenvalues[j - 1])) {
      std::ostringstream msg;
      msg << "solve_spectrum: eigenvalues not strictly increasing at j = " << j << " (W = "
          << out.eigenvalues[j - 1] << ", " << out.eigenvalues[j] << "; gamma = " << out.gamma
          << ", beta = " << beta << ", N = " << n << ")";
      throw NumericalError(msg.str());
    }
  }

  out.convergence.assign(num_states, std::numeric_limits<double>::quiet_NaN());
  if (probe_step > 0 && n - probe_step >= num_states) {
    const auto coarse = solve_block(basis, beta, n - probe_step);
    for (int j = 0; j < num_states; ++j) {
      out.convergence[j] = std::abs(out.eigenvalues[j] - coarse.values[j]);
    }
  }

  out.inv_xi.reserve(num_states);
  for (int j = 0; j < num_states; ++j) {
    out.inv_xi.push_back(expectation_inv_xi(out.eigenvector_coeffs.col(j), basis).value);
  }
  return out;
}

SpectrumResult solve_spectrum(double gamma, double beta, int num_states, const BasisSpec& basis,
                              int probe_step) {
  if (basis.gamma != gamma) {
    throw InvalidParameter("solve_spectrum: basis gamma does not match problem gamma");
  }
  return solve_spectrum(RitzBasis(basis), beta, num_states, probe_step);
}

InvXiExpectation expectation_inv_xi(const Eigen::VectorXd& coeffs, const RitzBasis& basis) {
  if (coeffs.size() != basis.size()) {
    throw InvalidInput("expectation_inv_xi: coefficient vector does not match basis size");
  }
  const double norm = coeffs.dot(basis.overlap() * coeffs);
  if (!(norm > 0.0)) throw InvalidInput("expectation_inv_xi: zero state");
  InvXiExpectation out;
  out.value = coeffs.dot(basis.inverse_xi() * coeffs) / norm;
  out.normalized_internally = std::abs(norm - 1.0) > 1e-10;
  return out;
}

}  // namespace radspec::variational
