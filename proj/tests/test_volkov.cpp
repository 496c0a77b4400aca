#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "volkov/volkov.hpp"

using namespace volkov;

namespace {

OnShellMomentum random_momentum(std::mt19937_64& rng, double p_minus_floor) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (;;) {
    OnShellMomentum p(1.0, d(rng), d(rng), d(rng));
    if (p.p_minus() >= p_minus_floor) return p;
  }
}

SpacetimePoint random_point(std::mt19937_64& rng, double support) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  SpacetimePoint pt{d(rng), d(rng), d(rng), 0.0};
  std::uniform_real_distribution<double> de(-1.0, support + 1.0);
  pt.z = pt.t - de(rng);
  return pt;
}

}  // namespace

TEST_CASE("zero field reduces to free plane waves") {
  const auto field = PlaneWaveField::zero();
  std::mt19937_64 rng(51);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_momentum(rng, 0.05);
    const auto pt = random_point(rng, 0.0);
    for (Branch b : {Branch::particle, Branch::antiparticle})
      for (Spin s : both_spins) {
        const VolkovState psi(p, s, b, field);
        const double px = p.energy() * pt.t - p.px() * pt.x - p.py() * pt.y -
                          p.pz() * pt.z;
        const BiSpinor expected =
            std::exp(cplx{0.0, -sign(b) * px}) * free_spinor(p, s, b);
        CHECK((psi.evaluate(pt) - expected).norm() < 1e-12);
      }
  }
}

TEST_CASE("kinematics below the light-cone cutoff are rejected") {
  const auto field = PlaneWaveField::zero();
  const auto p = OnShellMomentum::from_lightcone(1e-9, {0.0, 0.0}, 1.0);
  CHECK_THROWS_AS(VolkovState(p, Spin::s1, Branch::particle, field), std::domain_error);
}

TEST_CASE("first-order equation residual is small and second order in h") {
  const auto field = PlaneWaveField::linear_sin2(1.0, 1.0, 4.0);
  std::mt19937_64 rng(52);
  for (int i = 0; i < 10; ++i) {
    const auto p = random_momentum(rng, 0.3);
    const auto pt = random_point(rng, field.support_end());
    const VolkovState psi(p, Spin::s1, Branch::particle, field);
    const double coarse = first_order_dirac_residual(psi, pt, 4e-3);
    const double fine = first_order_dirac_residual(psi, pt, 2e-3);
    CHECK(fine < 1e-4);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.2));
  }
}

TEST_CASE("squared equation residual is small on both pulse shapes") {
  std::mt19937_64 rng(53);
  for (const auto& field : {PlaneWaveField::linear_sin2(1.0, 1.0, 4.0),
                            PlaneWaveField::circular_sin2(1.0, 1.0, 4.0)}) {
    for (int i = 0; i < 10; ++i) {
      const auto p = random_momentum(rng, 0.3);
      const auto pt = random_point(rng, field.support_end());
      for (Branch b : {Branch::particle, Branch::antiparticle}) {
        const VolkovState psi(p, Spin::s2, b, field);
        CHECK(squared_dirac_residual(psi, pt, 1e-3) < 1e-3);
      }
    }
  }
}

TEST_CASE("dressing factor solves its first-order flow equation") {
  const auto field = PlaneWaveField::circular_sin2(0.8, 1.2, 3.0);
  std::mt19937_64 rng(54);
  std::uniform_real_distribution<double> de(0.0, field.support_end());
  for (int i = 0; i < 20; ++i) {
    const auto p = random_momentum(rng, 0.3);
    for (Branch b : {Branch::particle, Branch::antiparticle}) {
      const VolkovState psi(p, Spin::s1, b, field);
      CHECK(f_ode_residual(psi, de(rng), 5e-5) < 1e-6);
    }
  }
}

TEST_CASE("both phase forms agree through the pulse") {
  const auto field = PlaneWaveField::linear_sin2(1.5, 0.8, 5.0);
  std::mt19937_64 rng(55);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_momentum(rng, 0.05);
    const auto pt = random_point(rng, field.support_end());
    const VolkovState psi(p, Spin::s1, Branch::particle, field);
    CHECK(std::abs(psi.phase(pt) - psi.phase_direct_form(pt)) < 1e-10);
  }
}

TEST_CASE("matrix factor is the identity outside the pulse") {
  const auto field = PlaneWaveField::linear_sin2(1.0, 1.0, 4.0);
  const auto p = OnShellMomentum::from_lightcone(0.9, {0.2, 0.1}, 1.0);
  const VolkovState psi(p, Spin::s1, Branch::particle, field);
  CHECK(max_abs_diff(psi.matrix_factor(-1.0), SpinMatrix::identity()) == 0.0);
  CHECK(max_abs_diff(psi.matrix_factor(field.support_end() + 1.0),
                     SpinMatrix::identity()) == 0.0);
}
