#include "volkov/volkov.hpp"

#include <cmath>
#include <stdexcept>

namespace volkov {

namespace {
const cplx i1{0.0, 1.0};
}

VolkovState::VolkovState(OnShellMomentum momentum, Spin spin, Branch branch,
                         const PlaneWaveField& field, double p_minus_cutoff)
    : momentum_(momentum), spin_(spin), branch_(branch), field_(&field),
      p_minus_cutoff_(p_minus_cutoff) {
  if (momentum_.p_minus() <= p_minus_cutoff_)
    throw std::domain_error("VolkovState: p_- at or below the singular-kinematics cutoff");
}

double VolkovState::phase_direct_form(const SpacetimePoint& point) const {
  const auto& p = momentum_;
  return p.energy() * point.t - p.pz() * point.z - p.px() * point.x - p.py() * point.y +
         field_->phase_integral(point.eta(), p, branch_);
}

double VolkovState::phase(const SpacetimePoint& point) const {
  const auto& p = momentum_;
  const double e = field_->charge();
  const double pm = p.p_minus();
  const auto acc = field_->accumulated(point.eta());
  // (p_perp -+ e A)^2 + m^2 integrated in eta, expanded over the cached
  // accumulators of A and A^2.
  const double integral =
      ((p.perp2() + p.mass() * p.mass()) * point.eta() -
       sign(branch_) * 2.0 * e * (p.px() * acc.ax + p.py() * acc.ay) + e * e * acc.a2) /
      (2.0 * pm);
  const double s = pm * (point.t + point.z) / 2.0 - p.px() * point.x - p.py() * point.y +
                   integral;

  const double other = phase_direct_form(point);
  const double scale = std::max({1.0, std::abs(s), std::abs(other)});
  if (std::abs(s - other) > 1e-10 * scale)
    throw std::logic_error("VolkovState::phase: light-cone and direct forms disagree");
  return s;
}

SpinMatrix VolkovState::matrix_factor(double eta) const {
  const double pm = momentum_.p_minus();
  if (pm <= p_minus_cutoff_)
    throw std::domain_error("matrix_factor: p_- at or below cutoff");
  const Vec2 a = field_->potential(eta);
  const FourVector a4{0.0, a.x, a.y, 0.0};
  const double coeff = sign(branch_) * field_->charge() / (2.0 * pm);
  const SpinMatrix arg = coeff * (slash(wave_vector_k) * slash(a4));
  const SpinMatrix factor = SpinMatrix::identity() + arg;
  if (max_abs_diff(factor, matrix_exponential(arg)) > 1e-12)
    throw std::logic_error("matrix_factor: truncated form deviates from matrix exponential");
  return factor;
}

BiSpinor VolkovState::evaluate(const SpacetimePoint& point) const {
  const double s = phase(point);
  const cplx phase_factor = std::exp(-i1 * (static_cast<double>(sign(branch_)) * s));
  const BiSpinor u = free_spinor(momentum_, spin_, branch_);
  return phase_factor * (matrix_factor(point.eta()) * u);
}

namespace {

// psi displaced by +-h along coordinate axis mu (0: t, 1: x, 2: y, 3: z).
BiSpinor displaced(const VolkovState& st, const SpacetimePoint& p, int mu, double dh) {
  SpacetimePoint q = p;
  switch (mu) {
    case 0: q.t += dh; break;
    case 1: q.x += dh; break;
    case 2: q.y += dh; break;
    default: q.z += dh; break;
  }
  return st.evaluate(q);
}

}  // namespace

double first_order_dirac_residual(const VolkovState& state, const SpacetimePoint& point,
                                  double h) {
  if (h <= 0.0) throw std::invalid_argument("first_order_dirac_residual: h must be positive");
  const BiSpinor psi = state.evaluate(point);
  const double e = state.field().charge();
  const Vec2 a = state.field().potential(point.eta());
  const FourVector a4{0.0, a.x, a.y, 0.0};

  BiSpinor residual = (-e) * (slash(a4) * psi) - state.momentum().mass() * psi;
  for (int mu = 0; mu < 4; ++mu) {
    const BiSpinor dpsi =
        (1.0 / (2.0 * h)) * (displaced(state, point, mu, h) - displaced(state, point, mu, -h));
    residual = residual + i1 * (gamma(mu) * dpsi);
  }
  const double r = residual.norm() / (state.momentum().mass() * psi.norm());
  if (!std::isfinite(r)) throw std::runtime_error("first_order_dirac_residual: non-finite");
  return r;
}

double squared_dirac_residual(const VolkovState& state, const SpacetimePoint& point,
                              double h) {
  if (h <= 0.0) throw std::invalid_argument("squared_dirac_residual: h must be positive");
  const BiSpinor psi = state.evaluate(point);
  const double e = state.field().charge();
  const double m = state.momentum().mass();
  const Vec2 a = state.field().potential(point.eta());

  // d'Alembertian: + for t, - for spatial second derivatives.
  BiSpinor residual;
  const double sign_mu[4] = {1.0, -1.0, -1.0, -1.0};
  for (int mu = 0; mu < 4; ++mu) {
    const BiSpinor second =
        (1.0 / (h * h)) *
        (displaced(state, point, mu, h) + displaced(state, point, mu, -h) + (-2.0) * psi);
    residual = residual + sign_mu[mu] * second;
  }
  // 2 i e A^mu d_mu = 2 i e (A_x d/dx + A_y d/dy)
  const BiSpinor dx = (1.0 / (2.0 * h)) *
                      (displaced(state, point, 1, h) - displaced(state, point, 1, -h));
  const BiSpinor dy = (1.0 / (2.0 * h)) *
                      (displaced(state, point, 2, h) - displaced(state, point, 2, -h));
  residual = residual + (2.0 * i1 * e) * (a.x * dx + a.y * dy);
  // -e^2 A.A with Minkowski A.A = -(A_x^2 + A_y^2)
  residual = residual + (e * e * a.norm2()) * psi;
  residual = residual + (i1 * e) * (state.field().spin_coupling(point.eta()) * psi);
  residual = residual + (m * m) * psi;

  const double r = residual.norm() / (m * m * psi.norm());
  if (!std::isfinite(r)) throw std::runtime_error("squared_dirac_residual: non-finite");
  return r;
}

namespace {

// f(eta) = exp(-i (+-) phase_integral) (1 +- e slash(k) slash(A) / (2 p_-))
SpinMatrix dressing_factor(const VolkovState& state, double eta) {
  const cplx phase = std::exp(
      -i1 * (static_cast<double>(sign(state.branch())) *
             state.field().phase_integral(eta, state.momentum(), state.branch())));
  return phase * state.matrix_factor(eta);
}

}  // namespace

double f_ode_residual(const VolkovState& state, double eta, double h) {
  if (h <= 0.0) throw std::invalid_argument("f_ode_residual: h must be positive");
  const auto& p = state.momentum();
  const double e = state.field().charge();
  const double m = p.mass();
  const double pk = p.p_minus();
  const double br = sign(state.branch());

  const SpinMatrix f = dressing_factor(state, eta);
  const SpinMatrix fdot =
      (1.0 / (2.0 * h)) * (dressing_factor(state, eta + h) - dressing_factor(state, eta - h));

  const Vec2 a = state.field().potential(eta);
  const double a_dot_p = -(a.x * p.px() + a.y * p.py());  // Minkowski A.p, A^0 = A_z = 0
  const double a_sq = -a.norm2();                         // Minkowski A.A

  const SpinMatrix op = (-br * 2.0 * i1 * pk) * fdot +
                        (br * 2.0 * e * a_dot_p - e * e * a_sq) * f +
                        (i1 * e) * (state.field().spin_coupling(eta) * f);
  const BiSpinor u = free_spinor(p, state.spin(), state.branch());
  const BiSpinor fu = f * u;

  const double r = (op * u).norm() / (2.0 * pk * m * fu.norm());
  if (!std::isfinite(r)) throw std::runtime_error("f_ode_residual: non-finite");
  return r;
}

}  // namespace volkov
