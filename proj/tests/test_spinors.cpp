#include <random>

#include "doctest.h"
#include "volkov/spinors.hpp"

using namespace volkov;

namespace {

OnShellMomentum random_momentum(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return {1.0, d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("rest-frame spinors are the unit basis vectors") {
  const OnShellMomentum rest(1.0, 0.0, 0.0, 0.0);
  const BiSpinor u1 = free_spinor(rest, Spin::s1, Branch::particle);
  CHECK(u1[0] == cplx{1.0});
  CHECK(u1[1] == cplx{0.0});
  CHECK(u1[2] == cplx{0.0});
  CHECK(u1[3] == cplx{0.0});
  const BiSpinor v1 = free_spinor(rest, Spin::s1, Branch::antiparticle);
  // antiparticle s=1 occupies the last lower component
  CHECK(v1[3] == cplx{1.0});
  CHECK(v1[0] == cplx{0.0});
}

TEST_CASE("unit normalization and spin orthogonality") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_momentum(rng);
    for (Branch b : {Branch::particle, Branch::antiparticle}) {
      const BiSpinor u1 = free_spinor(p, Spin::s1, b);
      const BiSpinor u2 = free_spinor(p, Spin::s2, b);
      CHECK(std::abs(inner(u1, u1) - 1.0) < 1e-13);
      CHECK(std::abs(inner(u2, u2) - 1.0) < 1e-13);
      CHECK(std::abs(inner(u1, u2)) < 1e-13);
    }
  }
}

TEST_CASE("free spinors solve the momentum-space Dirac equation") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_momentum(rng);
    for (Branch b : {Branch::particle, Branch::antiparticle})
      for (Spin s : both_spins) {
        const BiSpinor u = free_spinor(p, s, b);
        const BiSpinor r = slash(p.four_vector()) * u - (sign(b) * p.mass()) * u;
        CHECK(r.norm() < 1e-13);
      }
  }
}

TEST_CASE("spin sum reproduces the closed projector") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_momentum(rng);
    for (Branch b : {Branch::particle, Branch::antiparticle}) {
      SpinMatrix sum;
      for (Spin s : both_spins) {
        const BiSpinor u = free_spinor(p, s, b);
        sum = sum + outer(u, u);
      }
      CHECK(max_abs_diff(sum, free_projector(p, b)) < 1e-13);
      CHECK(max_abs_diff(spinor_completeness(p, b), free_projector(p, b)) < 1e-13);
    }
  }
}

TEST_CASE("particle and reflected antiparticle projectors partition the identity") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_momentum(rng);
    const OnShellMomentum reflected(p.mass(), -p.px(), -p.py(), -p.pz());
    const SpinMatrix sum = free_projector(p, Branch::particle) +
                           free_projector(reflected, Branch::antiparticle);
    CHECK(max_abs_diff(sum, SpinMatrix::identity()) < 1e-13);
  }
}
