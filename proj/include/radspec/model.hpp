#pragma once

#include <variant>

// Natural units hbar = c = 1 throughout.
namespace radspec::model {

/// Raw model constants of the neutral spin-half particle in the oscillator
/// plus Coulomb-like background.
struct PhysicalParams {
  double m = 1.0;      // mass, > 0
  double g = 0.0;      // coupling constant
  double b = 0.0;      // space-like vector magnitude, >= 0
  double B0 = 0.0;     // magnetic field magnitude
  double k = 0.0;      // axial wavenumber
  double omega = 1.0;  // oscillator angular frequency, > 0
  int l = 0;           // rotational quantum number
  int s = 1;           // spin label, +1 or -1

  double gbB0() const noexcept { return g * b * B0; }
};

/// Throws InvalidParameter unless m > 0, omega > 0, b >= 0, s = +-1 and all
/// reals are finite.
void validate(const PhysicalParams& p);

/// Physical energy E, as opposed to the reduced eigenvalue W.
struct PhysicalEnergy {
  double value;
};

struct ReducedEigenvalue {
  double value;
};

using EnergyOrW = std::variant<PhysicalEnergy, ReducedEigenvalue>;

struct DerivedQuantities {
  double nu_s = 0.0;     // l + (1 - s)/2
  double gamma = 0.0;    // |nu_s|
  double delta = 0.0;    // 2 gbB0 nu_s + s gbB0
  double zeta_sq = 0.0;  // 2 m E - k^2 - (gbB0)^2
  double beta = 0.0;     // delta / sqrt(m omega)
  double W = 0.0;        // zeta^2 / (m omega)
};

/// The dimensionless problem
///   -G'' - G'/xi + gamma^2/xi^2 G + (beta/xi + xi^2) G = W G.
struct RadialProblem {
  double gamma = 0.0;
  double beta = 0.0;
};

struct EnergyRecord {
  double W = 0.0;
  double omega = 0.0;
  double energy = 0.0;
  double k = 0.0;
  double gbB0_sq_over_2m = 0.0;
};

DerivedQuantities derive(const PhysicalParams& params, EnergyOrW energy_or_W);

RadialProblem reduce(const PhysicalParams& params);

/// E = omega W / 2 + (gbB0)^2/(2m) + k^2/(2m).
EnergyRecord energy_from_W(double W, double omega, const PhysicalParams& params);

/// Inverse of energy_from_W.
double W_from_energy(double energy, double omega, const PhysicalParams& params);

/// Energy of the polynomial solution attached to a truncation root:
/// omega = delta^2 / (m beta_root^2), E = omega (gamma + n + 1) + shifts.
/// Throws FrequencyUndefined when beta_root == 0.
EnergyRecord energy_from_truncation(int n, double gamma, double beta_root,
                                    const PhysicalParams& params);

}  // namespace radspec::model
