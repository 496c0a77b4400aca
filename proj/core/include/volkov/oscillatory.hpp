#pragma once

#include "volkov/clifford.hpp"
#include "volkov/lorentz.hpp"
#include "volkov/plane_wave.hpp"

namespace volkov {

/// Parameters of a Gaussian-smeared oscillatory integral over the excised
/// real axis |x| in [a, R], with phase kappa_1 x - kappa_2 / x.
struct SmearedIntegralSpec {
  int n = 0;                // inverse-power weight x^{-n}, n in {0,1,2}
  double kappa1 = 0.0;      // linear phase coefficient (smearing center)
  double kappa2 = 0.0;      // reciprocal phase coefficient
  double sigma = 0.05;      // Gaussian test-function width
  double excision = 1e-4;   // hole radius a around x = 0
  double cutoff = 0.0;      // outer radius R; 0 selects 50 / sigma

  void validate() const;
};

/// Base evaluation plus one joint refinement (a/2, 2R, sigma/2). Values are
/// normalized by 2 pi phi_sigma(0) so the two resolutions are comparable and
/// a delta-at-origin result reads as 1.
struct ConvergenceReport {
  cplx value;
  cplx refined;
  cplx extrapolated;
  double est_error = 0.0;  // at least |value - refined| / 3 by construction
};

/// Smeared x-integral of e^{-i(kappa_1 x - kappa_2 / x)}: the test variable
/// kappa_1 is integrated analytically around `center`, leaving a Gaussian
/// envelope in x. Result -> 1 (normalized) as sigma -> 0 when center = 0.
ConvergenceReport smeared_I0(double kappa2, double sigma, double center = 0.0,
                             double excision = 1e-4, double cutoff = 0.0);

/// Same with 1/x weight; the symmetric excision makes the kernel odd and the
/// normalized result vanishes.
ConvergenceReport smeared_I1(double center, double kappa2, double sigma,
                             double excision = 1e-4, double cutoff = 0.0);

/// 1/x^2 weight, smeared in kappa_2 around 0; u = 1/x converts it to the
/// smeared_I0 form on [1/R, 1/a] with the roles of the phase terms swapped.
ConvergenceReport smeared_I2(double kappa1, double sigma, double excision = 1e-4,
                             double cutoff = 0.0);

struct DeltaAssemblyReport {
  double jacobian1_deviation = 0.0;  // |FD - 1/2| for kappa_1 = (z - z')/2
  double jacobian2_deviation = 0.0;  // |FD - closed| at coincidence
  double matrix_deviation = 0.0;     // assembled kernel weights vs identity
};

/// Final reduction of the longitudinal completeness integral: kappa_1 and
/// kappa_2 collapse to deltas in z - z' with chain-rule constants 2 and
/// 2 / [(p_perp - e A)^2 + m^2], and the surviving kernel coefficients
/// weighted by those constants sum to the identity matrix.
DeltaAssemblyReport completeness_delta_assembly(const Vec2& p_perp, double mass,
                                                const PlaneWaveField& field, double t,
                                                double z, double fd_step = 1e-4);

}  // namespace volkov
