#include "radspec/recurrence.hpp"

#include "radspec/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace radspec::recurrence {

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw InvalidParameter("gamma must be finite and non-negative, got " + std::to_string(gamma));
  }
}

// a_{n+1}(beta) as a polynomial; T is double or an exact rational type.
// `den(j)` returns (j+2)(2 gamma + j + 2) in T.
template <class T, class Den>
std::vector<T> polynomial_recurrence(int n, Den den) {
  std::vector<T> prev;          // a_{-1} = 0
  std::vector<T> cur{T(1)};     // a_0 = 1
  for (int j = -1; j < n; ++j) {
    // next = (beta * cur + (2j - 2n) * prev) / den(j)
    std::vector<T> next(cur.size() + 1, T(0));
    for (std::size_t k = 0; k < cur.size(); ++k) next[k + 1] += cur[k];
    const T weight = T(2 * j - 2 * n);
    for (std::size_t k = 0; k < prev.size(); ++k) next[k] += weight * prev[k];
    const T d = den(j);
    for (auto& c : next) c /= d;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

struct ValueAndSlope {
  double value;
  double slope;
};

// a_{n+1}(beta) at kappa = 2n together with its beta-derivative.
ValueAndSlope truncation_value(int n, double gamma, double beta) {
  double a_prev = 0.0;
  double a_cur = 1.0;
  double d_prev = 0.0;
  double d_cur = 0.0;
  for (int j = -1; j < n; ++j) {
    const double den = (j + 2.0) * (2.0 * gamma + j + 2.0);
    const double w = 2.0 * j - 2.0 * n;
    const double a_next = (beta * a_cur + w * a_prev) / den;
    const double d_next = (a_cur + beta * d_cur + w * d_prev) / den;
    a_prev = a_cur;
    a_cur = a_next;
    d_prev = d_cur;
    d_cur = d_next;
  }
  return {a_cur, d_cur};
}

double polish_root(int n, double gamma, double beta) {
  auto f = truncation_value(n, gamma, beta);
  for (int it = 0; it < 60 && f.value != 0.0 && f.slope != 0.0; ++it) {
    const double next = beta - f.value / f.slope;
    const auto fn = truncation_value(n, gamma, next);
    if (std::abs(fn.value) >= std::abs(f.value)) break;
    const bool tiny = std::abs(next - beta) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(beta);
    beta = next;
    f = fn;
    if (tiny) break;
  }
  return beta;
}

// Sturm chain sign variations of `chain` at x = 0+ and x = +inf.
int variations(const std::vector<numerics::Polynomial>& chain, bool at_infinity) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    double v = 0.0;
    if (at_infinity) {
      v = p.leading();
    } else {
      // lowest-order nonzero coefficient gives the sign just right of zero
      for (double c : p.coeffs()) {
        if (c != 0.0) {
          v = c;
          break;
        }
      }
    }
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++count;
    last = sign;
  }
  return count;
}

numerics::Polynomial remainder(const numerics::Polynomial& num, const numerics::Polynomial& den,
                               double drop_below) {
  std::vector<double> r = num.coeffs();
  const auto& d = den.coeffs();
  const int dd = den.degree();
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    const double q = r[k] / d[dd];
    for (int t = 0; t <= dd; ++t) r[k - dd + t] -= q * d[t];
    r[k] = 0.0;
  }
  r.resize(std::max(dd, 1));
  for (auto& c : r) {
    if (std::abs(c) < drop_below) c = 0.0;
  }
  numerics::Polynomial out(std::move(r));
  out.normalize();
  return out;
}

struct SturmResult {
  int distinct_positive_roots;
  bool has_repeated_roots;
};

SturmResult sturm_positive(const numerics::Polynomial& p) {
  std::vector<numerics::Polynomial> chain{p, p.derivative()};
  const double scale = p.infinity_norm();
  while (chain.back().degree() > 0) {
    auto r = remainder(chain[chain.size() - 2], chain.back(), 1e-12 * scale);
    if (r.is_zero()) break;
    std::vector<double> neg = r.coeffs();
    for (auto& c : neg) c = -c;
    chain.emplace_back(std::move(neg));
  }
  const bool repeated = chain.back().degree() > 0;
  return {variations(chain, false) - variations(chain, true), repeated};
}

int grid_sign_changes(const numerics::Polynomial& p, double lo, double hi, int points) {
  const double ratio = std::pow(hi / lo, 1.0 / (points - 1));
  int changes = 0;
  int last = 0;
  double x = lo;
  for (int i = 0; i < points; ++i, x *= ratio) {
    const double v = p(x);
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

}  // namespace

RecurrenceState advance_recurrence(double gamma, double beta, double kappa, int J) {
  require_gamma(gamma);
  if (J < 1) throw InvalidInput("advance_recurrence: J must be >= 1");
  RecurrenceState st{gamma, beta, kappa, {}};
  st.coeffs.resize(J + 1);
  st.coeffs[0] = 1.0;
  double a_prev = 0.0;
  for (int j = -1; j + 2 <= J; ++j) {
    const double den = (j + 2.0) * (2.0 * gamma + j + 2.0);
    const double a_cur = st.coeffs[j + 1];
    st.coeffs[j + 2] = (beta * a_cur + (2.0 * j - kappa) * a_prev) / den;
    a_prev = a_cur;
  }
  return st;
}

TruncationPolynomialInBeta truncation_polynomial(int n, double gamma) {
  require_gamma(gamma);
  if (n < 0) throw InvalidInput("truncation_polynomial: n must be non-negative");

  TruncationPolynomialInBeta out;
  out.n = n;
  out.gamma = gamma;

  const double twice = 2.0 * gamma;
  const bool rational = twice == std::round(twice) && twice < 1e9;
  std::vector<double> coeffs;
  if (rational) {
    using boost::multiprecision::cpp_rational;
    const auto g2 = static_cast<long long>(twice);
    auto den = [g2](int j) { return cpp_rational((j + 2LL) * (g2 + j + 2LL)); };
    const auto exact = polynomial_recurrence<cpp_rational>(n, den);
    coeffs.reserve(exact.size());
    for (const auto& c : exact) coeffs.push_back(c.convert_to<double>());
    out.exact = true;
  } else {
    auto den = [gamma](int j) { return (j + 2.0) * (2.0 * gamma + j + 2.0); };
    coeffs = polynomial_recurrence<double>(n, den);
  }
  out.coeffs_in_beta = numerics::Polynomial(std::move(coeffs));
  return out;
}

std::vector<TruncationSolution> truncation_roots(int n, double gamma) {
  const auto poly = truncation_polynomial(n, gamma);
  const auto& c = poly.coeffs_in_beta.coeffs();

  // a_{n+1} contains only powers of beta with the parity of n+1, so it is a
  // polynomial q in x = beta^2 (times beta when n is even).
  const bool odd = (n + 1) % 2 == 1;
  std::vector<double> q;
  for (std::size_t k = odd ? 1 : 0; k < c.size(); k += 2) q.push_back(c[k]);

  std::vector<double> betas;
  if (q.size() > 1) {
    const numerics::Polynomial qp(q);
    const auto rr = numerics::real_roots(qp);
    if (static_cast<int>(rr.roots.size()) != rr.degree) {
      throw InternalConsistency("truncation_roots(n=" + std::to_string(n) +
                                "): " + std::to_string(rr.degree - rr.roots.size()) +
                                " complex roots in beta^2; all roots must be real");
    }
    for (double x : rr.roots) {
      if (!(x > 0.0)) {
        throw InternalConsistency("truncation_roots(n=" + std::to_string(n) +
                                  "): non-positive root beta^2 = " + std::to_string(x) +
                                  " implies imaginary beta");
      }
      betas.push_back(polish_root(n, gamma, std::sqrt(x)));
    }
  }
  const std::size_t positive = betas.size();
  if (odd) betas.push_back(0.0);
  for (std::size_t k = positive; k-- > 0;) betas.push_back(-betas[k]);
  std::sort(betas.begin(), betas.end(), std::greater<>());

  if (static_cast<int>(betas.size()) != n + 1) {
    throw InternalConsistency("truncation_roots: expected " + std::to_string(n + 1) +
                              " roots, found " + std::to_string(betas.size()));
  }
  for (std::size_t k = 1; k < betas.size(); ++k) {
    if (betas[k - 1] - betas[k] <= 1e-9 * (1.0 + std::abs(betas[k]))) {
      int multiplicity = 2;
      while (k + 1 < betas.size() &&
             betas[k] - betas[k + 1] <= 1e-9 * (1.0 + std::abs(betas[k + 1]))) {
        ++multiplicity;
        ++k;
      }
      throw InternalConsistency("truncation_roots(n=" + std::to_string(n) +
                                "): root near beta = " + std::to_string(betas[k]) +
                                " has multiplicity " + std::to_string(multiplicity));
    }
  }

  std::vector<TruncationSolution> out;
  out.reserve(betas.size());
  for (std::size_t idx = 0; idx < betas.size(); ++idx) {
    const double beta = betas[idx];
    const auto st = advance_recurrence(gamma, beta, 2.0 * n, n + 2);
    const double r1 = std::abs(st.coeffs[n + 1]);
    const double r2 = std::abs(st.coeffs[n + 2]);
    if (!(r1 < 1e-10) || !(r2 < 1e-10)) {
      throw InternalConsistency("truncation_roots(n=" + std::to_string(n) + ", i=" +
                                std::to_string(idx + 1) + "): residual |a_{n+1}| = " +
                                std::to_string(r1) + " above 1e-10");
    }
    TruncationSolution sol;
    sol.n = n;
    sol.i = static_cast<int>(idx) + 1;
    sol.gamma = gamma;
    sol.beta_root = beta;
    sol.poly_coeffs.assign(st.coeffs.begin(), st.coeffs.begin() + n + 1);
    sol.W_exact = 2.0 * (n + gamma + 1.0);
    sol.node_count = count_nodes(sol.poly_coeffs);
    out.push_back(std::move(sol));
  }
  return out;
}

int count_nodes(std::span<const double> poly_coeffs) {
  numerics::Polynomial p(std::vector<double>(poly_coeffs.begin(), poly_coeffs.end()));
  if (p.coeffs().empty() || p.is_zero()) {
    throw InvalidInput("count_nodes: polynomial is identically zero");
  }
  p.normalize();
  // Roots at the origin are not nodes on (0, inf).
  {
    const auto& c = p.coeffs();
    std::size_t lead_zeros = 0;
    while (c[lead_zeros] == 0.0) ++lead_zeros;
    if (lead_zeros > 0) p = numerics::Polynomial(std::vector<double>(c.begin() + lead_zeros, c.end()));
  }
  if (p.degree() == 0) return 0;

  const auto& c = p.coeffs();
  double upper = 0.0;
  double lower = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) upper = std::max(upper, std::abs(c[k] / c.back()));
  for (std::size_t k = 1; k < c.size(); ++k) lower = std::max(lower, std::abs(c[k] / c[0]));
  const double hi = 2.0 * (1.0 + upper);
  const double lo = 0.5 / (1.0 + lower);

  const auto sturm = sturm_positive(p);
  int grid = 0;
  for (int points = 2048; points <= 2048 * 64; points *= 4) {
    grid = grid_sign_changes(p, lo, hi, points);
    if (grid == sturm.distinct_positive_roots) return grid;
  }
  if (sturm.has_repeated_roots && grid < sturm.distinct_positive_roots) {
    // Even-multiplicity roots touch zero without a sign change.
    return grid;
  }
  throw NumericalError("count_nodes: grid sign changes (" + std::to_string(grid) +
                       ") disagree with Sturm count (" +
                       std::to_string(sturm.distinct_positive_roots) + ")");
}

}  // namespace radspec::recurrence
