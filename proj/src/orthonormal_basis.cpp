#include "orthonormal_basis.hpp"

#include "radspec/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace radspec::variational::detail {

namespace {

template <unsigned Digits>
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<Digits>,
                                           boost::multiprecision::et_off>;

template <class R>
class Square {
 public:
  explicit Square(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {}
  R& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const R& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<R> data_;
};

// half_gamma[t + 2] = Gamma(gamma + 1 + t/2) / 2 for t = -2 .. tmax.
// The t = -2 entry is only meaningful for gamma > 0.
template <class R>
std::vector<R> half_gamma_table(const R& gamma, int tmax) {
  std::vector<R> out(tmax + 3);
  const R half = R(1) / 2;
  // Integer steps: Gamma(gamma + 1 + k), odd steps: Gamma(gamma + 3/2 + k).
  R even = boost::math::tgamma(gamma + 1);
  R odd = boost::math::tgamma(gamma + half);  // t = -1
  out[1] = odd / 2;
  if (gamma > 0) out[0] = even / gamma / 2;
  R x_even = gamma + 1;
  R x_odd = gamma + half;
  for (int t = 0; t <= tmax; ++t) {
    if (t % 2 == 0) {
      out[t + 2] = even / 2;
      even *= x_even;
      x_even += 1;
    } else {
      odd *= x_odd;
      x_odd += 1;
      out[t + 2] = odd / 2;
    }
  }
  return out;
}

template <unsigned Digits>
std::optional<OrthonormalMatrices> build(double gamma_d, int n) {
  using R = Real<Digits>;
  const R gamma(gamma_d);
  const auto mom = half_gamma_table<R>(gamma, 2 * n + 2);
  auto m = [&](int t) -> const R& { return mom[t + 2]; };

  Square<R> S(n), K(n), M(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int t = i + j;
      S(i, j) = m(t);
      M(i, j) = m(t - 1);
      const R ai = gamma + i;
      const R aj = gamma + j;
      R k = 2 * m(t + 2) - (ai + aj) * m(t);
      const R c = ai * aj + gamma * gamma;
      if (c != 0) k += c * m(t - 2);
      K(i, j) = k;
    }
  }

  // Cholesky S = L L^T, with a pivot-ratio guard against loss of precision.
  const R eps = std::numeric_limits<R>::epsilon();
  const R min_ratio = eps * R(1e20);
  Square<R> L(n);
  for (int j = 0; j < n; ++j) {
    R d = S(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    if (!(d > min_ratio * S(j, j))) return std::nullopt;
    L(j, j) = sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      R t = S(i, j);
      for (int k = 0; k < j; ++k) t -= L(i, k) * L(j, k);
      L(i, j) = t / L(j, j);
    }
  }

  // X = L^{-1} A L^{-T} for symmetric A: Y = L^{-1} A, then X = L^{-1} Y^T.
  auto congruence = [&](const Square<R>& A) {
    Square<R> Y(n), X(n);
    for (int c = 0; c < n; ++c) {
      for (int i = 0; i < n; ++i) {
        R t = A(i, c);
        for (int k = 0; k < i; ++k) t -= L(i, k) * Y(k, c);
        Y(i, c) = t / L(i, i);
      }
    }
    for (int c = 0; c < n; ++c) {
      for (int i = 0; i < n; ++i) {
        R t = Y(c, i);
        for (int k = 0; k < i; ++k) t -= L(i, k) * X(k, c);
        X(i, c) = t / L(i, i);
      }
    }
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j <= i; ++j) {
        const double v = static_cast<double>((X(i, j) + X(j, i)) / 2);
        out(i, j) = v;
        out(j, i) = v;
      }
    }
    return out;
  };

  OrthonormalMatrices out;
  out.kinetic_harmonic = congruence(K);
  out.inverse_xi = congruence(M);
  out.working_digits = static_cast<int>(Digits);
  return out;
}

}  // namespace

OrthonormalMatrices build_orthonormal(double gamma, int size) {
  // log10 cond(S) grows roughly like 1.8 N; pick the first tier that keeps
  // about 20 digits in hand, escalating if the pivot guard trips.
  std::optional<OrthonormalMatrices> out;
  if (size <= 20 && (out = build<64>(gamma, size))) return *out;
  if (size <= 45 && (out = build<110>(gamma, size))) return *out;
  if (size <= 70 && (out = build<160>(gamma, size))) return *out;
  if ((out = build<240>(gamma, size))) return *out;
  throw BasisTooLarge("orthonormal basis of size " + std::to_string(size) + " at gamma = " +
                      std::to_string(gamma) +
                      " cannot be orthonormalised at 240 digits; use a smaller basis");
}

}  // namespace radspec::variational::detail
