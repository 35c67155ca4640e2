#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "radspec/errors.hpp"
#include "radspec/model.hpp"
#include "radspec/recurrence.hpp"

#include <cmath>
#include <random>

using namespace radspec;
using namespace radspec::model;

namespace {

PhysicalParams params(double m, double omega, double gbB0, double k, int l, int s) {
  PhysicalParams p;
  p.m = m;
  p.omega = omega;
  p.g = gbB0;
  p.b = 1.0;
  p.B0 = 1.0;
  p.k = k;
  p.l = l;
  p.s = s;
  return p;
}

}  // namespace

TEST_CASE("derive: quantum numbers") {
  const auto a = derive(params(1, 1, 0, 0, 0, +1), ReducedEigenvalue{0.0});
  CHECK(a.nu_s == 0.0);
  CHECK(a.gamma == 0.0);
  const auto b = derive(params(1, 1, 0, 0, 0, -1), ReducedEigenvalue{0.0});
  CHECK(b.nu_s == 1.0);
  CHECK(b.gamma == 1.0);
  const auto c = derive(params(1, 1, 1, 0, 0, +1), ReducedEigenvalue{0.0});
  CHECK(c.delta == 1.0);
  CHECK(c.beta == 1.0);
}

TEST_CASE("derive: energy and W are consistent") {
  const auto p = params(2.0, 0.7, 0.3, 0.4, 1, -1);
  const auto from_e = derive(p, PhysicalEnergy{3.25});
  const auto from_w = derive(p, ReducedEigenvalue{from_e.W});
  CHECK(from_w.zeta_sq == doctest::Approx(from_e.zeta_sq).epsilon(1e-14));
  CHECK(from_e.zeta_sq == doctest::Approx(2.0 * 2.0 * 3.25 - 0.16 - 0.09).epsilon(1e-14));
}

TEST_CASE("derive: invalid parameters") {
  CHECK_THROWS_AS(derive(params(1, 0, 1, 0, 0, 1), ReducedEigenvalue{0}), InvalidParameter);
  CHECK_THROWS_AS(derive(params(1, -1, 1, 0, 0, 1), ReducedEigenvalue{0}), InvalidParameter);
  CHECK_THROWS_AS(derive(params(0, 1, 1, 0, 0, 1), ReducedEigenvalue{0}), InvalidParameter);
  CHECK_THROWS_AS(derive(params(1, 1, 1, 0, 0, 0), ReducedEigenvalue{0}), InvalidParameter);
  auto p = params(1, 1, 1, 0, 0, 1);
  p.b = -1.0;
  CHECK_THROWS_AS(reduce(p), InvalidParameter);
  p = params(1, 1, 1, NAN, 0, 1);
  CHECK_THROWS_AS(reduce(p), InvalidParameter);
}

TEST_CASE("reduce examples") {
  const auto a = reduce(params(1, 1, 0, 0, 0, 1));
  CHECK(a.beta == 0.0);
  const auto b = reduce(params(1, 0.5, 1, 0, 0, 1));
  CHECK(b.gamma == 0.0);
  CHECK(b.beta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  const auto c = reduce(params(2, 2, -2.0 / 3.0, 0, 1, 1));
  CHECK(c.gamma == 1.0);
  CHECK(c.beta == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("reduce: beta sqrt(m omega) = delta and gamma is a non-negative integer") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> pos(0.1, 5.0), any(-3.0, 3.0);
  std::uniform_int_distribution<int> lq(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const auto p = params(pos(rng), pos(rng), any(rng), any(rng), lq(rng), t % 2 ? 1 : -1);
    const auto d = derive(p, ReducedEigenvalue{1.0});
    CHECK(d.beta * std::sqrt(p.m * p.omega) == doctest::Approx(d.delta).epsilon(1e-14));
    CHECK(d.gamma >= 0.0);
    CHECK(d.gamma == std::round(d.gamma));
    CHECK(d.nu_s == std::round(d.nu_s));
  }
}

TEST_CASE("energy_from_W examples") {
  CHECK(energy_from_W(4, 1, params(1, 1, 0, 0, 0, 1)).energy == doctest::Approx(2.0));
  CHECK(energy_from_W(0, 1, params(1, 1, 1, 0, 0, 1)).energy == doctest::Approx(0.5));
  const auto r = energy_from_W(4, 0.5, params(1, 0.5, 1, 2, 0, 1));
  CHECK(r.energy == doctest::Approx(3.5));
  CHECK(r.gbB0_sq_over_2m == doctest::Approx(0.5));
  CHECK(r.k == 2.0);
  CHECK_THROWS_AS(energy_from_W(4, 0, params(1, 1, 0, 0, 0, 1)), InvalidParameter);
}

TEST_CASE("energy_from_W round trip") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pos(0.1, 5.0), any(-20.0, 20.0);
  for (int t = 0; t < 200; ++t) {
    const auto p = params(pos(rng), pos(rng), any(rng) / 10, any(rng) / 10, 0, 1);
    const double W = any(rng);
    const auto e = energy_from_W(W, p.omega, p);
    const double back = W_from_energy(e.energy, p.omega, p);
    CHECK(std::abs(back - W) <= 1e-14 * std::max(1.0, std::abs(W)) * 8);
  }
}

TEST_CASE("energy_from_truncation examples") {
  const auto p = params(1, 1, 1, 0, 0, 1);  // delta = 1
  const auto r = energy_from_truncation(1, 0, std::sqrt(2.0), p);
  CHECK(r.omega == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.W == 4.0);
  CHECK(r.energy == doctest::Approx(0.5 * 2 + 0.5).epsilon(1e-15));
  const auto r2 = energy_from_truncation(1, 0, -std::sqrt(2.0), p);
  CHECK(r2.omega == r.omega);
  CHECK_THROWS_AS(energy_from_truncation(2, 0, 0.0, p), FrequencyUndefined);
  CHECK_THROWS_AS(energy_from_truncation(1, 0, std::sqrt(2.0), params(1, 1, 0, 0, 0, 1)),
                  InvalidParameter);
}

TEST_CASE("energy_from_truncation agrees with energy_from_W at the forced frequency") {
  const auto p = params(1.3, 1.0, 0.8, 0.6, 2, -1);
  const double delta = derive(p, ReducedEigenvalue{0}).delta;
  for (int n = 0; n <= 5; ++n) {
    for (double gamma : {0.0, 1.0, 3.0}) {
      for (const auto& s : recurrence::truncation_roots(n, gamma)) {
        if (s.beta_root == 0.0) continue;
        const auto t = energy_from_truncation(n, gamma, s.beta_root, p);
        const double omega = delta * delta / (p.m * s.beta_root * s.beta_root);
        const auto w = energy_from_W(2.0 * (n + gamma + 1.0), omega, p);
        CHECK(t.omega == doctest::Approx(omega).epsilon(1e-12));
        CHECK(t.energy == doctest::Approx(w.energy).epsilon(1e-12));
      }
    }
  }
}
