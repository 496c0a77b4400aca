#include <cmath>
#include <random>

#include "doctest.h"
#include "volkov/identities.hpp"

using namespace volkov;

namespace {

Vec2 random_vec2(std::mt19937_64& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng), d(rng)};
}

}  // namespace

TEST_CASE("g function is symmetric and has the known diagonal") {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> dm(0.1, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Vec2 perp = random_vec2(rng);
    const auto p = OnShellMomentum::from_lightcone(dm(rng), perp, 1.0);
    const auto q = OnShellMomentum::from_lightcone(dm(rng), perp, 1.0);
    CHECK(g_function(p, q) == doctest::Approx(g_function(q, p)).epsilon(1e-14));
    CHECK(g_function(p, p) ==
          doctest::Approx(p.p_minus() / (2.0 * p.energy())).epsilon(1e-14));
  }
}

TEST_CASE("g function requires matching transverse momenta") {
  const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, 0.0}, 1.0);
  const auto q = OnShellMomentum::from_lightcone(1.0, {0.4, 0.0}, 1.0);
  CHECK_THROWS_AS(g_function(p, q), std::domain_error);
}

TEST_CASE("bilinear and dressed-product identities across random kinematics") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> dm(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    const Vec2 perp = random_vec2(rng);
    const Vec2 a = random_vec2(rng);
    const auto p = OnShellMomentum::from_lightcone(dm(rng), perp, 1.0);
    const auto q = OnShellMomentum::from_lightcone(dm(rng), perp, 1.0);
    for (Branch b : {Branch::particle, Branch::antiparticle})
      for (Spin sp : both_spins)
        for (Spin s : both_spins) {
          CHECK(check_bilinears(q, p, sp, s, b).pass);
          CHECK(check_u_product(q, p, sp, s, b, a, -1.0).pass);
        }
  }
}

TEST_CASE("zeta Jacobian: finite difference vs closed form") {
  const auto field = PlaneWaveField::linear_sin2(1.0, 1.0, 4.0);
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> dm(0.3, 3.0);
  std::uniform_real_distribution<double> dz(-1.0, field.support_end() + 1.0);
  for (int i = 0; i < 30; ++i) {
    const Vec2 perp = random_vec2(rng);
    const double t = 0.4;
    const double z = t - dz(rng);
    // centered difference at the default step leaves a ~1e-8 floor, scaled
    // by 1/(p- p-'); the samples here reach p- = 0.3
    for (Branch b : {Branch::particle, Branch::antiparticle})
      CHECK(check_jacobian(dm(rng), dm(rng), perp, 1.0, field, b, t, z) < 5e-8);
  }
  // the closed form is bounded below by 1
  CHECK(zeta_derivative(1.0, 1.0, {0.3, 0.1}, 1.0, field, Branch::particle, 0.4, 0.1) >
        1.0);
}

TEST_CASE("kernel closed form, outer products and decomposition coincide") {
  const auto field = PlaneWaveField::circular_sin2(1.0, 1.0, 4.0);
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> dm(0.2, 3.0);
  std::uniform_real_distribution<double> dz(0.0, field.support_end());
  for (int i = 0; i < 100; ++i) {
    const Vec2 perp = random_vec2(rng);
    const double t = 0.2;
    CHECK(check_kernel_decomposition(perp, dm(rng), 1.0, field, t, t - dz(rng),
                                     t - dz(rng))
              .pass);
  }
}

TEST_CASE("leading kernel coefficient is universal") {
  std::mt19937_64 rng(65);
  const auto k1 = kernel_decomposition(random_vec2(rng), 1.0, random_vec2(rng),
                                       random_vec2(rng), -1.0);
  const auto k2 = kernel_decomposition(random_vec2(rng), 1.7, random_vec2(rng),
                                       random_vec2(rng), 0.5);
  CHECK(max_abs_diff(k1.k0, k2.k0) == 0.0);
  CHECK(max_abs_diff(k1.k0, 0.25 * ((gamma(0) + gamma(3)) * gamma(0))) == 0.0);
}

TEST_CASE("branch parity under reflected momentum continuation") {
  const auto field = PlaneWaveField::linear_sin2(1.0, 1.0, 4.0);
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> dm(0.2, 3.0);
  std::uniform_real_distribution<double> dz(0.0, field.support_end());
  for (int i = 0; i < 100; ++i) {
    const double t = -0.3;
    CHECK(check_parity_relation(random_vec2(rng), dm(rng), 1.0, field, t, t - dz(rng),
                                t - dz(rng))
              .pass);
  }
}

TEST_CASE("smeared orthonormality at a coarse width") {
  const auto field = PlaneWaveField::zero();
  const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, -0.2}, 1.0);
  SmearedOrthonormalityOptions opts;
  opts.sigma = 0.02;
  const auto equal =
      smeared_orthonormality(p, Spin::s1, Spin::s1, Branch::particle, field, opts);
  CHECK(equal.deviation < 0.01);
  const auto cross =
      smeared_orthonormality(p, Spin::s2, Spin::s1, Branch::particle, field, opts);
  CHECK(cross.deviation < 0.01);
  CHECK(cross.target == 0.0);
}

TEST_CASE("smeared orthonormality rejects widths comparable to p_minus") {
  const auto field = PlaneWaveField::zero();
  const auto p = OnShellMomentum::from_lightcone(0.5, {0.0, 0.0}, 1.0);
  SmearedOrthonormalityOptions opts;
  opts.sigma = 0.4;
  CHECK_THROWS_AS(
      smeared_orthonormality(p, Spin::s1, Spin::s1, Branch::particle, field, opts),
      std::invalid_argument);
}
