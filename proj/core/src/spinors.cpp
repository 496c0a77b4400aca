#include "volkov/spinors.hpp"

#include <cmath>
#include <stdexcept>

namespace volkov {

namespace {

// (p.sigma) acting on a two-spinor (a, b)
std::array<cplx, 2> pauli_dot(const OnShellMomentum& p, const std::array<cplx, 2>& v) {
  const cplx i1{0.0, 1.0};
  return {p.pz() * v[0] + (p.px() - i1 * p.py()) * v[1],
          (p.px() + i1 * p.py()) * v[0] - p.pz() * v[1]};
}

}  // namespace

BiSpinor free_spinor(const OnShellMomentum& p, Spin s, Branch branch) {
  const double p0 = p.energy();
  const double m = p.mass();
  const double prefactor = std::sqrt((p0 + m) / (2.0 * p0));

  // phi_1 = chi_2 = (1 0)^T, phi_2 = chi_1 = (0 1)^T
  std::array<cplx, 2> two_spinor{};
  const bool first_component =
      (branch == Branch::particle) == (s == Spin::s1);
  two_spinor[first_component ? 0 : 1] = 1.0;

  const auto lower = pauli_dot(p, two_spinor);
  BiSpinor u;
  if (branch == Branch::particle) {
    u[0] = two_spinor[0];
    u[1] = two_spinor[1];
    u[2] = lower[0] / (p0 + m);
    u[3] = lower[1] / (p0 + m);
  } else {
    u[0] = lower[0] / (p0 + m);
    u[1] = lower[1] / (p0 + m);
    u[2] = two_spinor[0];
    u[3] = two_spinor[1];
  }
  return prefactor * u;
}

SpinMatrix free_projector(const OnShellMomentum& p, Branch branch) {
  const SpinMatrix num =
      slash(p.four_vector()) + (sign(branch) * p.mass()) * SpinMatrix::identity();
  return (1.0 / (2.0 * p.energy())) * (num * gamma(0));
}

SpinMatrix spinor_completeness(const OnShellMomentum& p, Branch branch) {
  SpinMatrix sum;
  for (Spin s : both_spins) {
    const BiSpinor u = free_spinor(p, s, branch);
    sum = sum + outer(u, u);
  }
  if (max_abs_diff(sum, free_projector(p, branch)) > 1e-12)
    throw std::logic_error("spinor_completeness: outer-product sum deviates from closed form");
  return sum;
}

}  // namespace volkov
