#pragma once

#include <string>

#include "volkov/clifford.hpp"
#include "volkov/lorentz.hpp"
#include "volkov/plane_wave.hpp"
#include "volkov/spinors.hpp"

namespace volkov {

struct BilinearReport {
  std::string name;
  double max_deviation = 0.0;
  int samples = 0;
  double tolerance = 0.0;
  bool pass = false;

  void record(double deviation) {
    max_deviation = std::max(max_deviation, deviation);
    ++samples;
    pass = max_deviation <= tolerance;
  }
};

/// g(p', p) = [(p'_- + m)(p_- + m) + p_perp^2] / [4 sqrt((m+p0)(m+p'0) p0 p'0)];
/// both momenta must share the transverse momentum. Reduces to p_-/(2 p0)
/// at equal momenta.
double g_function(const OnShellMomentum& p_prime, const OnShellMomentum& p);

/// The four spinor bilinears u'^dag M u against their closed forms
/// (1 + (p_perp^2+m^2)/(p'_- p_-)) g, g, p_x g, p_y g. The equal-spin
/// identities hold for arbitrary (p'_-, p_-); the cross-spin sides vanish
/// on the p'_- = p_- diagonal where the longitudinal delta has support,
/// and are checked there. Requires p'_perp = p_perp.
BilinearReport check_bilinears(const OnShellMomentum& p_prime, const OnShellMomentum& p,
                               Spin s_prime, Spin s, Branch branch,
                               double tolerance = 1e-12);

/// U'^dag U = (1 + [(p_perp -+ e A)^2 + m^2]/(p_- p'_-)) g delta_{s's},
/// with U = (1 +- e slash(k) slash(A)/(2 p_-)) u and the primed factor
/// conjugated through gamma^0. Cross-spin checked at p'_- = p_-.
BilinearReport check_u_product(const OnShellMomentum& p_prime, const OnShellMomentum& p,
                               Spin s_prime, Spin s, Branch branch, const Vec2& a,
                               double e_charge, double tolerance = 1e-12);

/// |d zeta/dz (centered FD of the quadrature) - the closed-form integrand|
/// for zeta(z) = z - int_0^{t-z} [(p_perp -+ e A)^2 + m^2]/(p_- p'_-).
double check_jacobian(double p_minus_prime, double p_minus, const Vec2& p_perp, double mass,
                      const PlaneWaveField& field, Branch branch, double t, double z,
                      double fd_step = 1e-4);

/// d zeta/dz closed form at a point (always > 1).
double zeta_derivative(double p_minus_prime, double p_minus, const Vec2& p_perp, double mass,
                       const PlaneWaveField& field, Branch branch, double t, double z);

struct SmearedOrthonormality {
  cplx value;              // the smeared double integral
  double target = 0.0;     // 2 pi phi_sigma(0) p_-/p^0 (explicit 2 pi bookkeeping)
  double deviation = 0.0;  // |value - target| / target
  bool conclusive = true;  // false when halving sigma shifts the result by > 1%
};

struct SmearedOrthonormalityOptions {
  double sigma = 0.01;       // Gaussian test-function width in p'_-
  double window = 0.0;       // z half-window; 0 selects 20 / sigma
  double t = 0.0;            // evaluation time
  bool check_bias = false;   // re-run at sigma/2 and compare
};

/// Gaussian-smeared z-integral of the reduced orthonormality integrand
/// (transverse delta already applied analytically). Certifies the chain
/// delta(p'_perp - p_perp) delta((p'_- - p_-)/2) g delta_{s's}
///   -> delta(p'_vec - p_vec) delta_{s's} in 2 pi-explicit normalization.
SmearedOrthonormality smeared_orthonormality(const OnShellMomentum& p, Spin s_prime, Spin s,
                                             Branch branch, const PlaneWaveField& field,
                                             const SmearedOrthonormalityOptions& opts);

/// Spin-summed Volkov kernel sum_s U_{p,s}(x) U_{p,s}^dag(x'), scaled by
/// p^0/p_-, as the expanded particle-branch closed form
///   (1/2p_-) { slash(p) + m + (e/2p_-) [ (slash(A')slash(k) - slash(A)slash(k))
///     (slash(p) + m) - 2 p_- slash(A') + 2 p.A' slash(k)
///     - e slash(k) slash(A) slash(A') ] } gamma^0.
SpinMatrix volkov_kernel_closed(const Vec2& p_perp, double p_minus, double mass,
                                const Vec2& a, const Vec2& a_prime, double e_charge);

/// The same scaled kernel in factored form for either branch, as an explicit
/// rational function of (p_perp, p_-). Valid for any nonzero p_-; this is the
/// route that admits the analytic continuation p_+ -> -p_-.
SpinMatrix volkov_kernel_product(Branch branch, const Vec2& p_perp, double p_minus,
                                 double mass, const Vec2& a, const Vec2& a_prime,
                                 double e_charge);

/// Same kernel built from outer products of dressed free spinors
/// (requires a genuine on-shell momentum, p_- > 0).
SpinMatrix volkov_kernel_outer(Branch branch, const OnShellMomentum& p, const Vec2& a,
                               const Vec2& a_prime, double e_charge);

/// Coefficients of the exact decomposition kernel = K0 + K1/p_- + K2/p_-^2.
/// K0 = (gamma^0 + gamma^3) gamma^0 / 4 independent of all inputs.
struct KernelDecomposition {
  SpinMatrix k0;
  SpinMatrix k1;
  SpinMatrix k2;
};
KernelDecomposition kernel_decomposition(const Vec2& p_perp, double mass, const Vec2& a,
                                         const Vec2& a_prime, double e_charge);

/// Closed form vs outer products vs K0 + K1/p_- + K2/p_-^2, entrywise.
BilinearReport check_kernel_decomposition(const Vec2& p_perp, double p_minus, double mass,
                                          const PlaneWaveField& field, double t, double z,
                                          double z_prime, double tolerance = 1e-12);

/// Particle/antiparticle parity: the (+) kernel at (p_perp, p_-) equals the
/// (-) kernel at -p_vec analytically continued to p_+ = -p_- (substituted as
/// a value; no off-shell momentum is ever constructed).
BilinearReport check_parity_relation(const Vec2& p_perp, double p_minus, double mass,
                                     const PlaneWaveField& field, double t, double z,
                                     double z_prime, double tolerance = 1e-12);

}  // namespace volkov
