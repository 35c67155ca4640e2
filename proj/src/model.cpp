#include "radspec/model.hpp"

#include "radspec/errors.hpp"

#include <cmath>
#include <string>

namespace radspec::model {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidParameter(std::string("parameter '") + name + "' must be finite");
  }
}

void require_positive_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidParameter("omega must be positive, got " + std::to_string(omega));
  }
}

double shift(const PhysicalParams& p) {
  const double gbB0 = p.gbB0();
  return gbB0 * gbB0 / (2.0 * p.m) + p.k * p.k / (2.0 * p.m);
}

}  // namespace

void validate(const PhysicalParams& p) {
  require_finite(p.m, "m");
  require_finite(p.g, "g");
  require_finite(p.b, "b");
  require_finite(p.B0, "B0");
  require_finite(p.k, "k");
  require_finite(p.omega, "omega");
  if (!(p.m > 0.0)) throw InvalidParameter("m must be positive, got " + std::to_string(p.m));
  require_positive_omega(p.omega);
  if (p.b < 0.0) throw InvalidParameter("b must be non-negative, got " + std::to_string(p.b));
  if (p.s != 1 && p.s != -1) {
    throw InvalidParameter("s must be +1 or -1, got " + std::to_string(p.s));
  }
}

DerivedQuantities derive(const PhysicalParams& params, EnergyOrW energy_or_W) {
  validate(params);
  DerivedQuantities d;
  const double gbB0 = params.gbB0();
  const double m_omega = params.m * params.omega;

  d.nu_s = params.l + (1 - params.s) / 2;
  d.gamma = std::abs(d.nu_s);
  d.delta = 2.0 * gbB0 * d.nu_s + params.s * gbB0;
  d.beta = d.delta / std::sqrt(m_omega);

  if (const auto* e = std::get_if<PhysicalEnergy>(&energy_or_W)) {
    d.zeta_sq = 2.0 * params.m * e->value - params.k * params.k - gbB0 * gbB0;
    d.W = d.zeta_sq / m_omega;
  } else {
    d.W = std::get<ReducedEigenvalue>(energy_or_W).value;
    d.zeta_sq = d.W * m_omega;
  }
  return d;
}

RadialProblem reduce(const PhysicalParams& params) {
  const DerivedQuantities d = derive(params, ReducedEigenvalue{0.0});
  return {d.gamma, d.beta};
}

EnergyRecord energy_from_W(double W, double omega, const PhysicalParams& params) {
  require_positive_omega(omega);
  validate(params);
  EnergyRecord r;
  r.W = W;
  r.omega = omega;
  r.k = params.k;
  r.gbB0_sq_over_2m = params.gbB0() * params.gbB0() / (2.0 * params.m);
  r.energy = omega * W / 2.0 + r.gbB0_sq_over_2m + params.k * params.k / (2.0 * params.m);
  return r;
}

double W_from_energy(double energy, double omega, const PhysicalParams& params) {
  require_positive_omega(omega);
  validate(params);
  return 2.0 * (energy - shift(params)) / omega;
}

EnergyRecord energy_from_truncation(int n, double gamma, double beta_root,
                                    const PhysicalParams& params) {
  if (n < 0) throw InvalidParameter("n must be non-negative");
  if (!(gamma >= 0.0)) throw InvalidParameter("gamma must be non-negative");
  validate(params);
  if (beta_root == 0.0) {
    throw FrequencyUndefined(
        "truncation root beta = 0 has no associated frequency (omega = delta^2/(m beta^2))");
  }
  const double delta = derive(params, ReducedEigenvalue{0.0}).delta;
  const double omega = delta * delta / (params.m * beta_root * beta_root);
  if (!(omega > 0.0)) {
    throw InvalidParameter("delta = 0 gives omega = 0 for a nonzero truncation root");
  }
  EnergyRecord r;
  r.W = 2.0 * (n + gamma + 1.0);
  r.omega = omega;
  r.k = params.k;
  r.gbB0_sq_over_2m = params.gbB0() * params.gbB0() / (2.0 * params.m);
  r.energy = omega * (gamma + n + 1.0) + r.gbB0_sq_over_2m + params.k * params.k / (2.0 * params.m);
  return r;
}

}  // namespace radspec::model
