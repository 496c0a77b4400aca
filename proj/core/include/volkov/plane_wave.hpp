#pragma once

#include <memory>
#include <string>
#include <vector>

#include "volkov/clifford.hpp"
#include "volkov/lorentz.hpp"
#include "volkov/spinors.hpp"

namespace volkov {

enum class FieldShape { zero, constant_plateau, linear_sin2, circular_sin2, tabulated };

/// Transverse plane-wave vector potential A^mu(eta) = (0, A_x, A_y, 0)
/// as a function of the light-cone phase eta = t - z. A^0 = A_z = 0
/// identically, so k.A = 0 and the Lorenz condition hold by construction.
///
/// Phase integrals int_0^eta of A_x, A_y and A_x^2 + A_y^2 are evaluated by
/// adaptive composite Gauss-Legendre panels and cached on a monotone block
/// grid that grows lazily. The cache supports concurrent reads (extension is
/// single-writer); disable it for recompute-on-demand sweeps.
class PlaneWaveField {
 public:
  static PlaneWaveField zero(double charge = -1.0);
  /// A_x = a0 on (0, length), zero outside.
  static PlaneWaveField constant_plateau(double a0, double length, double charge = -1.0);
  /// A_x = a0 sin^2(omega eta / (2 cycles)) sin(omega eta) on [0, 2 pi cycles / omega].
  static PlaneWaveField linear_sin2(double a0, double omega, double cycles,
                                    double charge = -1.0);
  /// Same envelope, carriers (cos, sin) on the two transverse components.
  static PlaneWaveField circular_sin2(double a0, double omega, double cycles,
                                      double charge = -1.0);
  /// Piecewise-linear interpolation of tabulated samples (strictly increasing eta).
  static PlaneWaveField tabulated(std::vector<double> eta, std::vector<double> ax,
                                  std::vector<double> ay, double charge = -1.0);
  /// Two-column (eta, A_x) or three-column (eta, A_x, A_y) plain text, '#' comments.
  static PlaneWaveField from_file(const std::string& path, double charge = -1.0);

  PlaneWaveField(const PlaneWaveField&);
  PlaneWaveField& operator=(const PlaneWaveField&);
  PlaneWaveField(PlaneWaveField&&) noexcept;
  PlaneWaveField& operator=(PlaneWaveField&&) noexcept;
  ~PlaneWaveField();

  FieldShape shape() const { return shape_; }
  double charge() const { return charge_; }
  /// eta beyond which the potential vanishes (for tabulated shapes, the table end).
  double support_end() const;

  /// (A_x, A_y) at phase eta.
  Vec2 potential(double eta) const;
  /// (dA_x/deta, dA_y/deta); analytic for the built-in shapes, centered
  /// finite difference on the grid for tabulated data.
  Vec2 derivative(double eta) const;

  /// slash(k) slash(Adot(eta)); cross-checked against the antisymmetric
  /// field-strength contraction (1/2) gamma^nu gamma^mu F_{nu mu} with
  /// F_{nu mu} = k_nu Adot_mu - k_mu Adot_nu.
  SpinMatrix spin_coupling(double eta) const;

  struct Accumulators {
    double ax = 0.0;  // int_0^eta A_x
    double ay = 0.0;  // int_0^eta A_y
    double a2 = 0.0;  // int_0^eta (A_x^2 + A_y^2); the Minkowski A.A = -(this)
  };
  Accumulators accumulated(double eta) const;

  /// int_0^eta [ -+ 2 e p_perp.A + e^2 (A_x^2+A_y^2) ] / (2 p_-)
  double phase_integral(double eta, const OnShellMomentum& p, Branch branch) const;

  void enable_cache(bool on);

 private:
  PlaneWaveField();

  Accumulators integrate_from(double eta0, Accumulators base, double eta) const;

  FieldShape shape_ = FieldShape::zero;
  double a0_ = 0.0;
  double omega_ = 0.0;
  double cycles_ = 0.0;
  double length_ = 0.0;
  double charge_ = -1.0;
  std::vector<double> tab_eta_, tab_ax_, tab_ay_;

  struct Cache;
  std::unique_ptr<Cache> cache_;
  bool cache_enabled_ = true;
};

}  // namespace volkov
