#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace radspec::numerics {

/// Real polynomial with coefficients stored in ascending degree order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  /// Drops trailing zero coefficients (exact zeros only).
  void normalize();

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept;

  double operator()(double x) const noexcept;
  /// Evaluates p(x) and p'(x) in one Horner pass.
  std::pair<double, double> value_and_derivative(double x) const noexcept;
  Polynomial derivative() const;

  double leading() const { return coeffs_.back(); }
  double infinity_norm() const noexcept;
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

 private:
  std::vector<double> coeffs_;
};

/// Gamma function for x > 0, relative error below 1e-13 on (0, 60].
double gamma_fn(double x);

struct RealRoots {
  std::vector<double> roots;  // sorted decreasing
  int degree = 0;
};

/// Real roots of `p` via balanced companion-matrix eigenvalues followed by
/// Newton polishing. A root counts as real when |Im| <= tol (1 + |Re|).
RealRoots real_roots(const Polynomial& p, double tol = 1e-8);

struct SymEig {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns orthonormal
};

/// Dense symmetric eigendecomposition. Rejects matrices whose asymmetry
/// exceeds 1e-12 * ||A||.
SymEig sym_eig(const Eigen::MatrixXd& a);

/// Number of eigenvalues of the symmetric tridiagonal matrix (d, e) that are
/// strictly less than x (Sturm sequence count).
int sturm_count(std::span<const double> d, std::span<const double> e, double x);

/// Lowest k eigenvalues of the symmetric tridiagonal matrix with diagonal d
/// and off-diagonal e, by Sturm bisection. Ascending order.
std::vector<double> tridiag_lowest_eigs(std::span<const double> d,
                                        std::span<const double> e, int k);

}  // namespace radspec::numerics
