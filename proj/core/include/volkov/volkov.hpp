#pragma once

#include "volkov/clifford.hpp"
#include "volkov/lorentz.hpp"
#include "volkov/plane_wave.hpp"
#include "volkov/spinors.hpp"

namespace volkov {

struct SpacetimePoint {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double eta() const { return t - z; }
};

/// Exact solution of the Dirac equation in a plane-wave field: a free
/// plane wave dressed by a field-dependent phase and the nilpotent
/// matrix factor 1 +- e slash(k) slash(A) / (2 p_-).
///
/// Where the potential and its accumulated integrals vanish, evaluation
/// reduces to the free solution exp(-i (+- p.x)) u_{p,s}.
class VolkovState {
 public:
  VolkovState(OnShellMomentum momentum, Spin spin, Branch branch,
              const PlaneWaveField& field, double p_minus_cutoff = 1e-8);

  const OnShellMomentum& momentum() const { return momentum_; }
  Spin spin() const { return spin_; }
  Branch branch() const { return branch_; }
  const PlaneWaveField& field() const { return *field_; }

  /// The phase S in the light-cone form
  ///   p_-(t+z)/2 - p_perp.x_perp + int_0^{t-z} [(p_perp -+ e A)^2 + m^2]/(2 p_-).
  /// Cross-checked against the direct form p.x + phase_integral on every
  /// call; throws std::logic_error if the two disagree beyond 1e-10.
  double phase(const SpacetimePoint& point) const;

  /// The direct form p^0 t - p_z z - p_perp.x_perp + phase_integral.
  double phase_direct_form(const SpacetimePoint& point) const;

  /// 1 +- e slash(k) slash(A(eta)) / (2 p_-); verified against the matrix
  /// exponential of the same argument (the series terminates by nilpotency).
  SpinMatrix matrix_factor(double eta) const;

  /// exp(-i (+- S)) * matrix_factor(eta) * u_{p,s}
  BiSpinor evaluate(const SpacetimePoint& point) const;

 private:
  OnShellMomentum momentum_;
  Spin spin_;
  Branch branch_;
  const PlaneWaveField* field_;
  double p_minus_cutoff_;
};

/// Relative residual || [i gamma^mu (d_mu + i e A_mu) - m] psi || / (m ||psi||),
/// derivatives by centered finite differences with step h per coordinate.
double first_order_dirac_residual(const VolkovState& state, const SpacetimePoint& point,
                                  double h);

/// Relative residual of the squared equation
/// [d^2 + 2 i e A^mu d_mu - e^2 A.A + i e slash(k) slash(Adot) + m^2] psi,
/// normalized by m^2 ||psi||.
double squared_dirac_residual(const VolkovState& state, const SpacetimePoint& point,
                              double h);

/// Relative residual of the first-order ODE satisfied by the dressing factor:
/// [ -+ 2 i p.k fdot + (+- 2 e A.p - e^2 A.A + i e slash(k) slash(Adot)) f ] u,
/// with fdot by centered finite difference in eta.
double f_ode_residual(const VolkovState& state, double eta, double h);

}  // namespace volkov
