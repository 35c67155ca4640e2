#include "radspec/numerics.hpp"

#include "radspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace radspec::numerics {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

void Polynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

bool Polynomial::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

double Polynomial::operator()(double x) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<double, double> Polynomial::value_and_derivative(double x) const noexcept {
  double p = 0.0;
  double dp = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
  }
  return {p, dp};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

double Polynomial::infinity_norm() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_fn: argument must be positive and finite, got " + std::to_string(x));
  }
  return std::tgamma(x);
}

namespace {

// Parlett-Reinsch balancing with radix 2 (exact scaling, no rounding).
void balance(Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  constexpr double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

double polish(const Polynomial& p, double x) {
  auto [fx, dfx] = p.value_and_derivative(x);
  for (int it = 0; it < 60 && fx != 0.0 && dfx != 0.0; ++it) {
    const double next = x - fx / dfx;
    auto [fn, dfn] = p.value_and_derivative(next);
    if (std::abs(fn) >= std::abs(fx)) break;
    const bool tiny_step = std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x);
    x = next;
    fx = fn;
    dfx = dfn;
    if (tiny_step) break;
  }
  return x;
}

}  // namespace

RealRoots real_roots(const Polynomial& poly, double tol) {
  Polynomial p = poly;
  p.normalize();
  const int n = p.degree();
  if (n < 1 || p.is_zero()) {
    throw InvalidInput("real_roots: polynomial must have degree >= 1");
  }
  RealRoots out;
  out.degree = n;
  const auto& c = p.coeffs();

  if (n == 1) {
    out.roots.push_back(-c[0] / c[1]);
    return out;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
  balance(companion);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("real_roots: companion eigenvalue iteration did not converge");
  }
  for (const std::complex<double>& z : solver.eigenvalues()) {
    if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z.real()))) {
      out.roots.push_back(polish(p, z.real()));
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), std::greater<>());
  return out;
}

SymEig sym_eig(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidInput("sym_eig: matrix is not square");
  const double scale = a.cwiseAbs().maxCoeff();
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw InvalidInput("sym_eig: matrix asymmetry " + std::to_string(asym) +
                       " exceeds 1e-12 * ||A||");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("sym_eig: symmetric eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

int sturm_count(std::span<const double> d, std::span<const double> e, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double off = i == 0 ? 0.0 : e[i - 1] * e[i - 1] / q;
    q = d[i] - x - off;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiag_lowest_eigs(std::span<const double> d, std::span<const double> e,
                                        int k) {
  const auto n = static_cast<int>(d.size());
  if (n == 0 || static_cast<int>(e.size()) != n - 1) {
    throw InvalidInput("tridiag_lowest_eigs: need |e| = |d| - 1 with |d| >= 1");
  }
  if (k < 0 || k > n) {
    throw InvalidInput("tridiag_lowest_eigs: requested " + std::to_string(k) +
                       " eigenvalues from a matrix of size " + std::to_string(n));
  }

  // Gershgorin interval.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i < n - 1 ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  const double span = std::max(hi - lo, 1.0);
  lo -= 1e-12 * span;
  hi += 1e-12 * span;

  std::vector<double> out;
  out.reserve(k);
  double floor = lo;
  for (int j = 0; j < k; ++j) {
    // Smallest x with at least j+1 eigenvalues below it.
    double a = floor;
    double b = hi;
    for (int it = 0; it < 300; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (b - a <= 1e-14 * std::max(1.0, std::abs(mid))) break;
      if (sturm_count(d, e, mid) >= j + 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double lambda = 0.5 * (a + b);
    out.push_back(lambda);
    floor = a;
  }
  return out;
}

}  // namespace radspec::numerics
