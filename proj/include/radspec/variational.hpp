#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

// Ritz variational solution of
//   -G'' - G'/xi + gamma^2/xi^2 G + (beta/xi + xi^2) G = W G
// in the span of u_j = xi^(gamma+j) exp(-xi^2/2), j = 0..N-1, with the
// radial measure xi dxi.
namespace radspec::variational {

enum class BasisKind {
  RawMonomial,            // u_j themselves; S is a Hankel matrix of Gamma moments
  OrthonormalOscillator,  // orthonormalised combinations of the same span; S = I
};

std::string_view to_string(BasisKind kind);
/// Accepts "raw-monomial" / "raw" and "orthonormal-oscillator" / "orthonormal".
BasisKind basis_kind_from_string(std::string_view name);

inline constexpr int kDefaultBasisSize = 40;
inline constexpr int kDefaultProbeStep = 5;
inline constexpr int kRawMaxSize = 25;
inline constexpr int kOrthonormalMaxSize = 100;

struct BasisSpec {
  double gamma = 0.0;
  int size = kDefaultBasisSize;
  BasisKind kind = BasisKind::OrthonormalOscillator;
};

/// m(p) = int_0^inf xi^p exp(-xi^2) xi dxi = Gamma((p+2)/2) / 2.
double moment(double p);

/// Overlap matrix. Identity for the orthonormal kind.
Eigen::MatrixXd gram_matrix(const BasisSpec& basis);

/// H_ij = int [u_i' u_j' + (gamma^2/xi^2 + beta/xi + xi^2) u_i u_j] xi dxi.
Eigen::MatrixXd hamiltonian_matrix(const BasisSpec& basis, double beta);

/// M_ij = int u_i (1/xi) u_j xi dxi, the beta-derivative of H.
Eigen::MatrixXd inverse_xi_matrix(const BasisSpec& basis);

/// Matrices of one basis, assembled once and reusable across beta values.
/// H(beta) = K + beta M.
class RitzBasis {
 public:
  explicit RitzBasis(const BasisSpec& spec);

  const BasisSpec& spec() const noexcept { return spec_; }
  int size() const noexcept { return spec_.size; }
  const Eigen::MatrixXd& overlap() const noexcept { return overlap_; }
  const Eigen::MatrixXd& beta_independent() const noexcept { return kinetic_harmonic_; }
  const Eigen::MatrixXd& inverse_xi() const noexcept { return inverse_xi_; }
  Eigen::MatrixXd hamiltonian(double beta) const;

 private:
  BasisSpec spec_;
  Eigen::MatrixXd overlap_;
  Eigen::MatrixXd kinetic_harmonic_;
  Eigen::MatrixXd inverse_xi_;
};

struct SpectrumResult {
  double gamma = 0.0;
  double beta = 0.0;
  BasisKind kind = BasisKind::OrthonormalOscillator;
  int basis_size = 0;
  std::vector<double> eigenvalues;     // strictly increasing
  Eigen::MatrixXd eigenvector_coeffs;  // column j: basis coefficients of state j, c^T S c = 1
  std::vector<double> convergence;     // |W_j(N) - W_j(N - probe)|, NaN when no probe ran
  std::vector<double> inv_xi;          // <1/xi> per state
};

SpectrumResult solve_spectrum(double gamma, double beta, int num_states, const BasisSpec& basis,
                              int probe_step = kDefaultProbeStep);

SpectrumResult solve_spectrum(const RitzBasis& basis, double beta, int num_states,
                              int probe_step = kDefaultProbeStep);

/// Lowest eigenvalues only, on the leading `size` x `size` block of `basis`.
std::vector<double> lowest_eigenvalues(const RitzBasis& basis, double beta, int num_states,
                                       int size);

struct InvXiExpectation {
  double value = 0.0;
  bool normalized_internally = false;  // input was not S-normalised
};

InvXiExpectation expectation_inv_xi(const Eigen::VectorXd& coeffs, const RitzBasis& basis);

}  // namespace radspec::variational
