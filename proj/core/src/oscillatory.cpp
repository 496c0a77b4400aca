#include "volkov/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "volkov/identities.hpp"
#include "volkov/quadrature.hpp"

namespace volkov {

namespace {

constexpr double kEnvelopeExponentCap = 100.0;  // e^{-100} is below noise

// int_a^R e^{-sigma^2 x^2 / 2} x^{-n} trig(c x - kappa2 / x) dx with panel
// widths bounded by the local phase rate so every oscillation gets a full
// 16-node panel.
template <typename Kernel>
double half_axis_integral(Kernel kernel, double c, double kappa2, double sigma, double a,
                          double r) {
  const auto& gl = GaussLegendre::order(16);
  double total = 0.0;
  double lo = a;
  while (lo < r) {
    const double rate =
        std::abs(c) + kappa2 / (lo * lo) + sigma * sigma * lo + 1e-30;
    const double width = std::min({std::numbers::pi / rate, 2.0, r - lo});
    const double mid = lo + 0.5 * width, half = 0.5 * width;
    const double exponent = 0.5 * sigma * sigma * lo * lo;
    if (exponent < kEnvelopeExponentCap) {
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double x = mid + half * gl.nodes[i];
        total += half * gl.weights[i] * std::exp(-0.5 * sigma * sigma * x * x) *
                 kernel(x, c * x - kappa2 / x);
      }
    }
    lo += width;
  }
  return total;
}

// Folded over x -> -x the even part is 2 cos and the odd (1/x-weighted)
// part is -2i sin.
cplx raw_I0(double c, double kappa2, double sigma, double a, double r) {
  return 2.0 * half_axis_integral([](double, double phase) { return std::cos(phase); },
                                  c, kappa2, sigma, a, r);
}

cplx raw_I1(double c, double kappa2, double sigma, double a, double r) {
  const double odd = half_axis_integral(
      [](double x, double phase) { return std::sin(phase) / x; }, c, kappa2, sigma, a, r);
  return cplx{0.0, -2.0 * odd};
}

double reference_scale(double sigma) { return std::sqrt(2.0 * std::numbers::pi) / sigma; }

template <typename Eval>
ConvergenceReport with_refinement(Eval eval, double sigma, double a, double r) {
  ConvergenceReport report;
  report.value = eval(sigma, a, r) / reference_scale(sigma);
  report.refined = eval(0.5 * sigma, 0.5 * a, 2.0 * r) / reference_scale(0.5 * sigma);
  // Richardson in the refinement parameter, assuming first-order bias.
  report.extrapolated = 2.0 * report.refined - report.value;
  report.est_error = std::max(std::abs(report.value - report.refined), 1e-12);
  return report;
}

void check_common(double sigma, double excision) {
  if (sigma <= 0.0) throw std::invalid_argument("smearing width must be positive");
  if (excision <= 0.0) throw std::invalid_argument("excision radius must be positive");
}

}  // namespace

void SmearedIntegralSpec::validate() const {
  if (n < 0 || n > 2) throw std::invalid_argument("weight power must be 0, 1, or 2");
  if (kappa1 * kappa2 < 0.0)
    throw std::invalid_argument("phase coefficients must not have opposite signs");
  check_common(sigma, excision);
  if (cutoff < 0.0) throw std::invalid_argument("cutoff must be nonnegative");
}

ConvergenceReport smeared_I0(double kappa2, double sigma, double center, double excision,
                             double cutoff) {
  check_common(sigma, excision);
  if (kappa2 < 0.0) throw std::invalid_argument("smeared_I0: kappa2 must be nonnegative");
  const double r = cutoff > 0.0 ? cutoff : 50.0 / sigma;
  return with_refinement(
      [&](double s, double a, double rr) { return raw_I0(center, kappa2, s, a, rr); },
      sigma, excision, r);
}

ConvergenceReport smeared_I1(double center, double kappa2, double sigma, double excision,
                             double cutoff) {
  check_common(sigma, excision);
  if (center * kappa2 < 0.0)
    throw std::invalid_argument("smeared_I1: phase coefficients must not oppose");
  const double r = cutoff > 0.0 ? cutoff : 50.0 / sigma;
  return with_refinement(
      [&](double s, double a, double rr) { return raw_I1(center, kappa2, s, a, rr); },
      sigma, excision, r);
}

ConvergenceReport smeared_I2(double kappa1, double sigma, double excision, double cutoff) {
  check_common(sigma, excision);
  if (kappa1 < 0.0) throw std::invalid_argument("smeared_I2: kappa1 must be nonnegative");
  const double r = cutoff > 0.0 ? cutoff : 50.0 / sigma;
  // u = 1/x maps the 1/x^2 weight away and swaps the two phase roles; the
  // smeared domain [a, R] becomes [1/R, 1/a] and the u-space Gaussian comes
  // from smearing kappa_2.
  return with_refinement(
      [&](double s, double a, double rr) { return raw_I0(0.0, kappa1, s, 1.0 / rr, 1.0 / a); },
      sigma, excision, r);
}

DeltaAssemblyReport completeness_delta_assembly(const Vec2& p_perp, double mass,
                                                const PlaneWaveField& field, double t,
                                                double z, double fd_step) {
  const double e = field.charge();
  const auto dressed = [&](double eta) {
    const Vec2 a = field.potential(eta);
    const double dx = p_perp.x - e * a.x;
    const double dy = p_perp.y - e * a.y;
    return 0.5 * (dx * dx + dy * dy + mass * mass);
  };

  const auto kappa1 = [&](double z_prime) { return 0.5 * (z - z_prime); };
  const auto kappa2 = [&](double z_prime) {
    if (z_prime == z) return 0.0;
    return integrate_adaptive(dressed, t - z, t - z_prime,
                              1e-12 * std::max(1.0, std::abs(z - z_prime)));
  };

  DeltaAssemblyReport report;
  const double fd1 = (kappa1(z + fd_step) - kappa1(z - fd_step)) / (2.0 * fd_step);
  report.jacobian1_deviation = std::abs(std::abs(fd1) - 0.5);

  const double fd2 = (kappa2(z + fd_step) - kappa2(z - fd_step)) / (2.0 * fd_step);
  report.jacobian2_deviation = std::abs(std::abs(fd2) - dressed(t - z));

  const Vec2 a = field.potential(t - z);
  const auto k = kernel_decomposition(p_perp, mass, a, a, e);
  const double weight2 = 2.0 / (2.0 * dressed(t - z));
  const SpinMatrix assembled = weight2 * k.k2 + 2.0 * k.k0;
  report.matrix_deviation = max_abs_diff(assembled, SpinMatrix::identity());
  return report;
}

}  // namespace volkov
