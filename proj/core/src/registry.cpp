#include "volkov/registry.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "volkov/clifford.hpp"
#include "volkov/identities.hpp"
#include "volkov/lorentz.hpp"
#include "volkov/oscillatory.hpp"
#include "volkov/plane_wave.hpp"
#include "volkov/quadrature.hpp"
#include "volkov/spinors.hpp"
#include "volkov/volkov.hpp"

namespace volkov {

namespace {

double metric(int nu, int mu) {
  if (nu != mu) return 0.0;
  return nu == 0 ? 1.0 : -1.0;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Unit mass, components in [-2, 2]; p_- bounded away from the light-cone
// singularity.
OnShellMomentum random_momentum(std::mt19937_64& rng, double p_minus_floor = 0.05) {
  for (;;) {
    OnShellMomentum p(1.0, uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0),
                      uniform(rng, -2.0, 2.0));
    if (p.p_minus() >= p_minus_floor) return p;
  }
}

FourVector random_four_vector(std::mt19937_64& rng) {
  return {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0),
          uniform(rng, -2.0, 2.0)};
}

Vec2 random_vec2(std::mt19937_64& rng, double scale = 2.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

PlaneWaveField build_field(const RunConfig& c) {
  if (c.field_shape == "zero") return PlaneWaveField::zero(c.field_charge);
  if (c.field_shape == "constant_plateau")
    return PlaneWaveField::constant_plateau(c.field_a0, 2.0 * std::numbers::pi *
                                                            c.field_cycles / c.field_omega,
                                            c.field_charge);
  if (c.field_shape == "circular_sin2")
    return PlaneWaveField::circular_sin2(c.field_a0, c.field_omega, c.field_cycles,
                                         c.field_charge);
  return PlaneWaveField::linear_sin2(c.field_a0, c.field_omega, c.field_cycles,
                                     c.field_charge);
}

class Runner {
 public:
  Runner(const RunConfig& config, std::vector<CheckReport>& reports)
      : config_(config), reports_(reports) {}

  void check(const std::string& suite, const std::string& name, const std::string& anchor,
             double tolerance, const std::function<double(std::mt19937_64&)>& body) {
    CheckReport r;
    r.suite = suite;
    r.name = name;
    r.anchor = anchor;
    r.tolerance = tolerance;
    r.seed = config_.seed;
    std::mt19937_64 rng(config_.seed ^ std::hash<std::string>{}(suite + "/" + name));
    const auto start = std::chrono::steady_clock::now();
    try {
      r.measured_error = body(rng);
    } catch (const std::exception&) {
      r.measured_error = std::numeric_limits<double>::infinity();
    }
    r.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.pass = r.measured_error <= r.tolerance;
    reports_.push_back(r);
  }

 private:
  const RunConfig& config_;
  std::vector<CheckReport>& reports_;
};

void register_algebra(Runner& run, const RunConfig& c) {
  run.check("algebra", "anticommutators", "{g^nu, g^mu} = 2 eta^{nu mu} I", 0.0,
            [](std::mt19937_64&) {
              double dev = 0.0;
              for (int nu = 0; nu < 4; ++nu)
                for (int mu = 0; mu < 4; ++mu)
                  dev = std::max(dev, max_abs_diff(anticommutator(gamma(nu), gamma(mu)),
                                                   (2.0 * metric(nu, mu)) *
                                                       SpinMatrix::identity()));
              return dev;
            });
  run.check("algebra", "hermiticity", "g0 hermitian, g1..g3 antihermitian", 0.0,
            [](std::mt19937_64&) {
              double dev = max_abs_diff(gamma(0).adjoint(), gamma(0));
              for (int i = 1; i < 4; ++i)
                dev = std::max(dev, max_abs_diff(gamma(i).adjoint(), -gamma(i)));
              return dev;
            });
  run.check("algebra", "adjoint_conjugation", "g0 g^mu+ g0 = g^mu", 0.0,
            [](std::mt19937_64&) {
              double dev = 0.0;
              for (int mu = 0; mu < 4; ++mu)
                dev = std::max(dev, max_abs_diff(dirac_adjoint_conjugate(gamma(mu)),
                                                 gamma(mu)));
              return dev;
            });
  run.check("algebra", "trace_metric", "tr(g^mu g^nu) = 4 eta^{mu nu}", 0.0,
            [](std::mt19937_64&) {
              double dev = 0.0;
              for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu)
                  dev = std::max(dev, std::abs((gamma(mu) * gamma(nu)).trace() -
                                               4.0 * metric(mu, nu)));
              return dev;
            });
  run.check("algebra", "slash_square", "slash(v)^2 = (v.v) I", c.tol_matrix,
            [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const FourVector v = random_four_vector(rng);
                const SpinMatrix s = slash(v);
                dev = std::max(dev, max_abs_diff(s * s, minkowski_dot(v, v) *
                                                            SpinMatrix::identity()));
              }
              return dev;
            });
  run.check("algebra", "nilpotent_factor", "(slash(k) slash(A))^2 = 0 for transverse A",
            c.tol_matrix, [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const Vec2 a = random_vec2(rng);
                const SpinMatrix ka =
                    slash(wave_vector_k) * slash(FourVector{0.0, a.x, a.y, 0.0});
                dev = std::max(dev, (ka * ka).max_abs());
              }
              return dev;
            });
  run.check("algebra", "nilpotent_exponential",
            "exp(alpha slash(k) slash(A)) = I + alpha slash(k) slash(A)", c.tol_matrix,
            [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < 50; ++i) {
                const Vec2 a = random_vec2(rng);
                const double alpha = uniform(rng, -2.0, 2.0);
                const SpinMatrix arg =
                    alpha * (slash(wave_vector_k) * slash(FourVector{0.0, a.x, a.y, 0.0}));
                dev = std::max(dev, max_abs_diff(matrix_exponential(arg),
                                                 SpinMatrix::identity() + arg));
              }
              return dev;
            });
}

void register_spinors(Runner& run, const RunConfig& c) {
  run.check("spinors", "orthonormality", "u+_{s'} u_s = delta_{s's}", c.tol_matrix,
            [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                for (Branch b : {Branch::particle, Branch::antiparticle})
                  for (Spin sp : both_spins)
                    for (Spin s : both_spins) {
                      const cplx v = inner(free_spinor(p, sp, b), free_spinor(p, s, b));
                      dev = std::max(dev, std::abs(v - (sp == s ? 1.0 : 0.0)));
                    }
              }
              return dev;
            });
  run.check("spinors", "completeness", "sum_s u u+ = (slash(p) +- m) g0 / (2 p0)",
            c.tol_matrix, [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  SpinMatrix sum;
                  for (Spin s : both_spins) {
                    const BiSpinor u = free_spinor(p, s, b);
                    sum = sum + outer(u, u);
                  }
                  dev = std::max(dev, max_abs_diff(sum, free_projector(p, b)));
                }
              }
              return dev;
            });
  run.check("spinors", "dirac_equation", "(slash(p) -+ m) u = 0", c.tol_matrix,
            [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                for (Branch b : {Branch::particle, Branch::antiparticle})
                  for (Spin s : both_spins) {
                    const BiSpinor u = free_spinor(p, s, b);
                    const BiSpinor r =
                        slash(p.four_vector()) * u - (sign(b) * p.mass()) * u;
                    dev = std::max(dev, r.norm());
                  }
              }
              return dev;
            });
  run.check("spinors", "projector_idempotent", "P^2 = P for the branch projector",
            c.tol_matrix, [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  const SpinMatrix pr = free_projector(p, b);
                  dev = std::max(dev, max_abs_diff(pr * pr, pr));
                }
              }
              return dev;
            });
}

void register_field(Runner& run, const RunConfig& c) {
  run.check("field", "support_boundaries", "A vanishes at and outside the pulse edges",
            c.tol_matrix, [&](std::mt19937_64&) {
              double dev = 0.0;
              for (const auto& field :
                   {PlaneWaveField::linear_sin2(c.field_a0, c.field_omega, c.field_cycles),
                    PlaneWaveField::circular_sin2(c.field_a0, c.field_omega,
                                                  c.field_cycles)}) {
                const double end = field.support_end();
                for (double eta : {0.0, end, -0.5, end + 0.5, -10.0, end + 10.0}) {
                  const Vec2 a = field.potential(eta);
                  dev = std::max({dev, std::abs(a.x), std::abs(a.y)});
                }
              }
              return dev;
            });
  run.check("field", "derivative_fd", "analytic dA/deta vs centered difference", c.tol_fd,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              const double h = 1e-5;
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const double eta = uniform(rng, 0.0, field.support_end());
                const Vec2 d = field.derivative(eta);
                const Vec2 fd =
                    (1.0 / (2.0 * h)) * (field.potential(eta + h) - field.potential(eta - h));
                dev = std::max({dev, std::abs(d.x - fd.x), std::abs(d.y - fd.y)});
              }
              return dev;
            });
  run.check("field", "accumulator_additivity",
            "cached phase accumulators match direct quadrature between two phases", 1e-10,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 20; ++i) {
                const double e1 = uniform(rng, -2.0, field.support_end() + 2.0);
                const double e2 = uniform(rng, -2.0, field.support_end() + 2.0);
                const auto acc1 = field.accumulated(e1);
                const auto acc2 = field.accumulated(e2);
                const double direct_ax = integrate_adaptive(
                    [&](double eta) { return field.potential(eta).x; }, e1, e2, 1e-13);
                const double direct_a2 = integrate_adaptive(
                    [&](double eta) { return field.potential(eta).norm2(); }, e1, e2,
                    1e-13);
                dev = std::max({dev, std::abs(acc2.ax - acc1.ax - direct_ax),
                                std::abs(acc2.a2 - acc1.a2 - direct_a2)});
              }
              return dev;
            });
  run.check("field", "cache_consistency", "cached and recomputed accumulators agree",
            c.tol_identity, [&](std::mt19937_64& rng) {
              const auto cached = build_field(c);
              auto direct = cached;
              direct.enable_cache(false);
              double dev = 0.0;
              for (int i = 0; i < 20; ++i) {
                const double eta = uniform(rng, -2.0, cached.support_end() + 2.0);
                const auto a = cached.accumulated(eta);
                const auto b = direct.accumulated(eta);
                dev = std::max({dev, std::abs(a.ax - b.ax), std::abs(a.ay - b.ay),
                                std::abs(a.a2 - b.a2)});
              }
              return dev;
            });
  run.check("field", "spin_coupling_nilpotent", "(slash(k) slash(Adot))^2 = 0",
            c.tol_matrix, [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const double eta = uniform(rng, 0.0, field.support_end());
                const SpinMatrix sc = field.spin_coupling(eta);
                dev = std::max(dev, (sc * sc).max_abs());
              }
              return dev;
            });
}

SpacetimePoint random_point(std::mt19937_64& rng, const PlaneWaveField& field) {
  SpacetimePoint pt;
  pt.t = uniform(rng, -1.0, 1.0);
  pt.x = uniform(rng, -1.0, 1.0);
  pt.y = uniform(rng, -1.0, 1.0);
  const double eta = uniform(rng, -1.0, field.support_end() + 1.0);
  pt.z = pt.t - eta;
  return pt;
}

void register_volkov(Runner& run, const RunConfig& c) {
  run.check("volkov", "zero_field_reduction", "zero field recovers exp(-i (+- p.x)) u",
            c.tol_identity, [&](std::mt19937_64& rng) {
              const auto field = PlaneWaveField::zero(c.field_charge);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                const SpacetimePoint pt = random_point(rng, field);
                for (Branch b : {Branch::particle, Branch::antiparticle})
                  for (Spin s : both_spins) {
                    const VolkovState state(p, s, b, field);
                    const double px = p.energy() * pt.t - p.px() * pt.x - p.py() * pt.y -
                                      p.pz() * pt.z;
                    const cplx phase = std::exp(cplx{0.0, -sign(b) * px});
                    const BiSpinor expected = phase * free_spinor(p, s, b);
                    dev = std::max(dev, (state.evaluate(pt) - expected).norm());
                  }
              }
              return dev;
            });
  run.check("volkov", "first_order_residual",
            "[i g^mu (d_mu + i e A_mu) - m] psi = 0, centered differences", 1e-4,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const OnShellMomentum p = random_momentum(rng, 0.2);
                const SpacetimePoint pt = random_point(rng, field);
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  const VolkovState state(p, Spin::s1, b, field);
                  dev = std::max(dev, first_order_dirac_residual(state, pt, 1e-3));
                }
              }
              return dev;
            });
  run.check("volkov", "squared_residual",
            "[d^2 + 2 i e A.d - e^2 A.A + i e slash(k) slash(Adot) + m^2] psi = 0", 1e-3,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const OnShellMomentum p = random_momentum(rng, 0.2);
                const SpacetimePoint pt = random_point(rng, field);
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  const VolkovState state(p, Spin::s2, b, field);
                  dev = std::max(dev, squared_dirac_residual(state, pt, 1e-3));
                }
              }
              return dev;
            });
  run.check("volkov", "residual_h_convergence",
            "first-order residual scales as h^2 (halving h divides it by 4)", 0.8,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 5; ++i) {
                const OnShellMomentum p = random_momentum(rng, 0.3);
                const SpacetimePoint pt = random_point(rng, field);
                const VolkovState state(p, Spin::s1, Branch::particle, field);
                const double coarse = first_order_dirac_residual(state, pt, 4e-3);
                const double fine = first_order_dirac_residual(state, pt, 2e-3);
                dev = std::max(dev, std::abs(coarse / fine - 4.0));
              }
              return dev;
            });
  run.check("volkov", "f_ode_residual",
            "[-+ 2 i p.k fdot + (+- 2 e A.p - e^2 A.A + i e slash(k) slash(Adot)) f] u = 0",
            1e-6, [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const OnShellMomentum p = random_momentum(rng, 0.3);
                const double eta = uniform(rng, 0.0, field.support_end());
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  const VolkovState state(p, Spin::s1, b, field);
                  dev = std::max(dev, f_ode_residual(state, eta, 5e-5));
                }
              }
              return dev;
            });
  run.check("volkov", "phase_forms_agree",
            "light-cone phase equals p.x plus the field phase integral", 1e-10,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                const SpacetimePoint pt = random_point(rng, field);
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  const VolkovState state(p, Spin::s1, b, field);
                  dev = std::max(dev,
                                 std::abs(state.phase(pt) - state.phase_direct_form(pt)));
                }
              }
              return dev;
            });
  run.check("volkov", "matrix_factor_exponential",
            "nilpotent dressing factor equals its matrix exponential", c.tol_identity,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const OnShellMomentum p = random_momentum(rng, 0.2);
                const double eta = uniform(rng, 0.0, field.support_end());
                for (Branch b : {Branch::particle, Branch::antiparticle}) {
                  const VolkovState state(p, Spin::s1, b, field);
                  const Vec2 a = field.potential(eta);
                  const SpinMatrix arg =
                      (sign(b) * field.charge() / (2.0 * p.p_minus())) *
                      (slash(wave_vector_k) * slash(FourVector{0.0, a.x, a.y, 0.0}));
                  dev = std::max(dev, max_abs_diff(state.matrix_factor(eta),
                                                   matrix_exponential(arg)));
                }
              }
              return dev;
            });
}

void register_orthonormality(Runner& run, const RunConfig& c) {
  run.check("orthonormality", "bilinears",
            "the four u'+ M u bilinears against their g-function closed forms",
            c.tol_identity, [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const Vec2 perp = random_vec2(rng);
                const auto p =
                    OnShellMomentum::from_lightcone(uniform(rng, 0.1, 3.0), perp, 1.0);
                const auto pp =
                    OnShellMomentum::from_lightcone(uniform(rng, 0.1, 3.0), perp, 1.0);
                for (Branch b : {Branch::particle, Branch::antiparticle})
                  for (Spin sp : both_spins)
                    for (Spin s : both_spins)
                      dev = std::max(dev, check_bilinears(pp, p, sp, s, b).max_deviation);
              }
              return dev;
            });
  run.check("orthonormality", "dressed_product",
            "U'+ U collapses to the field-dressed g-function form", c.tol_identity,
            [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const Vec2 perp = random_vec2(rng);
                const Vec2 a = random_vec2(rng);
                const auto p =
                    OnShellMomentum::from_lightcone(uniform(rng, 0.1, 3.0), perp, 1.0);
                const auto pp =
                    OnShellMomentum::from_lightcone(uniform(rng, 0.1, 3.0), perp, 1.0);
                for (Branch b : {Branch::particle, Branch::antiparticle})
                  for (Spin sp : both_spins)
                    for (Spin s : both_spins)
                      dev = std::max(
                          dev, check_u_product(pp, p, sp, s, b, a, c.field_charge)
                                   .max_deviation);
              }
              return dev;
            });
  run.check("orthonormality", "g_diagonal", "g(p, p) = p_- / (2 p0)", c.tol_identity,
            [&](std::mt19937_64& rng) {
              double dev = 0.0;
              for (int i = 0; i < c.samples_matrix; ++i) {
                const OnShellMomentum p = random_momentum(rng);
                dev = std::max(dev,
                               std::abs(g_function(p, p) - p.p_minus() / (2.0 * p.energy())));
              }
              return dev;
            });
  run.check("orthonormality", "jacobian_fd",
            "d zeta / dz by finite difference matches the closed-form integrand", c.tol_fd,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < c.samples_points; ++i) {
                const Vec2 perp = random_vec2(rng);
                const double pm = uniform(rng, 0.3, 3.0);
                const double pmp = uniform(rng, 0.3, 3.0);
                const double t = uniform(rng, -1.0, 1.0);
                const double z = t - uniform(rng, -1.0, field.support_end() + 1.0);
                for (Branch b : {Branch::particle, Branch::antiparticle})
                  dev = std::max(dev, check_jacobian(pmp, pm, perp, 1.0, field, b, t, z));
              }
              return dev;
            });
  run.check("orthonormality", "smeared_zero_field",
            "zero-field smeared z-integral hits the 2 pi-normalized target", 0.005,
            [&](std::mt19937_64&) {
              const auto field = PlaneWaveField::zero(c.field_charge);
              const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, -0.2}, 1.0);
              SmearedOrthonormalityOptions opts;
              const auto r = smeared_orthonormality(p, Spin::s1, Spin::s1,
                                                    Branch::particle, field, opts);
              return r.deviation;
            });
  run.check("orthonormality", "smeared_cross_spin",
            "smeared cross-spin overlap vanishes on the same scale", 0.005,
            [&](std::mt19937_64&) {
              const auto field = PlaneWaveField::zero(c.field_charge);
              const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, -0.2}, 1.0);
              SmearedOrthonormalityOptions opts;
              const auto r = smeared_orthonormality(p, Spin::s2, Spin::s1,
                                                    Branch::particle, field, opts);
              return r.deviation;
            });
  run.check("orthonormality", "smeared_pulse",
            "smeared z-integral through the pulse keeps the free-case target", 0.01,
            [&](std::mt19937_64&) {
              const auto field = build_field(c);
              const auto p = OnShellMomentum::from_lightcone(1.0, {0.3, -0.2}, 1.0);
              SmearedOrthonormalityOptions opts;
              const auto r = smeared_orthonormality(p, Spin::s1, Spin::s1,
                                                    Branch::particle, field, opts);
              return r.deviation;
            });
}

void register_completeness(Runner& run, const RunConfig& c) {
  run.check("completeness", "kernel_forms",
            "closed kernel vs spin-summed outer products vs 1/p_- decomposition",
            c.tol_identity, [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 200; ++i) {
                const Vec2 perp = random_vec2(rng);
                const double pm = uniform(rng, 0.2, 3.0);
                const double t = uniform(rng, -1.0, 1.0);
                const double z = t - uniform(rng, 0.0, field.support_end());
                const double zp = t - uniform(rng, 0.0, field.support_end());
                dev = std::max(dev, check_kernel_decomposition(perp, pm, 1.0, field, t, z,
                                                               zp)
                                        .max_deviation);
              }
              return dev;
            });
  run.check("completeness", "inverse_power_recovery",
            "three-point polynomial fit in 1/p_- recovers the kernel coefficients", 1e-10,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 50; ++i) {
                const Vec2 perp = random_vec2(rng);
                const double t = uniform(rng, -1.0, 1.0);
                const Vec2 a = field.potential(t - uniform(rng, 0.0, field.support_end()));
                const Vec2 ap = field.potential(t - uniform(rng, 0.0, field.support_end()));
                const double x0 = 1.0 / 0.5, x1 = 1.0 / 1.0, x2 = 1.0 / 2.0;
                const SpinMatrix m0 = volkov_kernel_product(Branch::particle, perp, 0.5,
                                                            1.0, a, ap, field.charge());
                const SpinMatrix m1 = volkov_kernel_product(Branch::particle, perp, 1.0,
                                                            1.0, a, ap, field.charge());
                const SpinMatrix m2 = volkov_kernel_product(Branch::particle, perp, 2.0,
                                                            1.0, a, ap, field.charge());
                // Lagrange reconstruction of the quadratic's coefficients.
                const auto coeff = [&](int power) {
                  SpinMatrix sum;
                  const double xs[3] = {x0, x1, x2};
                  const SpinMatrix* ms[3] = {&m0, &m1, &m2};
                  for (int j = 0; j < 3; ++j) {
                    const double xa = xs[(j + 1) % 3], xb = xs[(j + 2) % 3];
                    const double den = (xs[j] - xa) * (xs[j] - xb);
                    double num = 0.0;
                    if (power == 2) num = 1.0;
                    else if (power == 1) num = -(xa + xb);
                    else num = xa * xb;
                    sum = sum + (num / den) * (*ms[j]);
                  }
                  return sum;
                };
                const auto k = kernel_decomposition(perp, 1.0, a, ap, field.charge());
                dev = std::max({dev, max_abs_diff(coeff(0), k.k0),
                                max_abs_diff(coeff(1), k.k1), max_abs_diff(coeff(2), k.k2)});
              }
              return dev;
            });
  run.check("completeness", "parity",
            "particle kernel equals the antiparticle kernel at reflected momentum",
            c.tol_identity, [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 200; ++i) {
                const Vec2 perp = random_vec2(rng);
                const double pm = uniform(rng, 0.2, 3.0);
                const double t = uniform(rng, -1.0, 1.0);
                const double z = t - uniform(rng, 0.0, field.support_end());
                const double zp = t - uniform(rng, 0.0, field.support_end());
                dev = std::max(
                    dev, check_parity_relation(perp, pm, 1.0, field, t, z, zp).max_deviation);
              }
              return dev;
            });
  run.check("completeness", "delta_assembly_matrix",
            "delta-weighted kernel coefficients assemble to the identity", c.tol_identity,
            [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 20; ++i) {
                const Vec2 perp = random_vec2(rng);
                const double t = uniform(rng, -1.0, 1.0);
                const double z = t - uniform(rng, 0.0, field.support_end());
                dev = std::max(
                    dev,
                    completeness_delta_assembly(perp, 1.0, field, t, z).matrix_deviation);
              }
              return dev;
            });
  run.check("completeness", "delta_assembly_jacobians",
            "coincidence Jacobians of the two longitudinal phases by finite difference",
            c.tol_fd, [&](std::mt19937_64& rng) {
              const auto field = build_field(c);
              double dev = 0.0;
              for (int i = 0; i < 20; ++i) {
                const Vec2 perp = random_vec2(rng);
                const double t = uniform(rng, -1.0, 1.0);
                const double z = t - uniform(rng, 0.0, field.support_end());
                const auto r = completeness_delta_assembly(perp, 1.0, field, t, z);
                dev = std::max({dev, r.jacobian1_deviation, r.jacobian2_deviation});
              }
              return dev;
            });
}

// The raw smeared values carry a bias linear in sigma (pi kappa sigma /
// sqrt(2 pi) for the reciprocal phase); the refinement extrapolation in
// ConvergenceReport removes it, so the extrapolated value is what the
// distributional targets are compared against.
void register_appendix(Runner& run, const RunConfig& c) {
  const double sigma = c.sigma;
  run.check("appendix", "i0_fourier", "pure Gaussian Fourier case integrates to 1", 0.001,
            [=](std::mt19937_64&) {
              return std::abs(smeared_I0(0.0, sigma).extrapolated - 1.0);
            });
  run.check("appendix", "i0_offaxis", "reciprocal phase leaves the delta weight intact",
            c.tol_smeared, [=](std::mt19937_64&) {
              return std::abs(smeared_I0(1.0, sigma).extrapolated - 1.0);
            });
  run.check("appendix", "i0_far_center", "smearing far from the origin sees no delta",
            0.01, [=](std::mt19937_64&) {
              return std::abs(smeared_I0(0.0, sigma, 5.0).extrapolated);
            });
  run.check("appendix", "i1_symmetric", "odd 1/x kernel cancels under symmetric excision",
            1e-3, [=](std::mt19937_64&) {
              return std::abs(smeared_I1(0.0, 0.0, sigma).extrapolated);
            });
  run.check("appendix", "i1_offaxis", "1/x integral stays null with both phases on",
            c.tol_smeared, [=](std::mt19937_64&) {
              return std::abs(smeared_I1(1.0, 1.0, sigma).extrapolated);
            });
  run.check("appendix", "i1_far_center", "1/x integral decays away from the origin", 0.01,
            [=](std::mt19937_64&) {
              return std::abs(smeared_I1(10.0, 0.0, sigma).extrapolated);
            });
  run.check("appendix", "i2_duality", "u = 1/x maps the 1/x^2 case onto the Fourier case",
            0.001, [=](std::mt19937_64&) {
              return std::abs(smeared_I2(0.0, sigma).extrapolated -
                              smeared_I0(0.0, sigma).extrapolated);
            });
  run.check("appendix", "i2_offaxis", "1/x^2 integral carries unit delta weight",
            c.tol_smeared, [=](std::mt19937_64&) {
              return std::abs(smeared_I2(1.0, sigma).extrapolated - 1.0);
            });
  run.check("appendix", "refinement_shift",
            "extrapolated results are stable under a further width refinement",
            c.tol_smeared, [=](std::mt19937_64&) {
              double dev = 0.0;
              dev = std::max(dev, std::abs(smeared_I0(1.0, sigma).extrapolated -
                                           smeared_I0(1.0, 0.5 * sigma).extrapolated));
              dev = std::max(dev, std::abs(smeared_I1(1.0, 1.0, sigma).extrapolated -
                                           smeared_I1(1.0, 1.0, 0.5 * sigma).extrapolated));
              dev = std::max(dev, std::abs(smeared_I2(1.0, sigma).extrapolated -
                                           smeared_I2(1.0, 0.5 * sigma).extrapolated));
              return dev;
            });
}

void register_all(Runner& run, const RunConfig& config) {
  for (const auto& suite : config.selected_suites()) {
    if (suite == "algebra") register_algebra(run, config);
    else if (suite == "spinors") register_spinors(run, config);
    else if (suite == "field") register_field(run, config);
    else if (suite == "volkov") register_volkov(run, config);
    else if (suite == "orthonormality") register_orthonormality(run, config);
    else if (suite == "completeness") register_completeness(run, config);
    else if (suite == "appendix") register_appendix(run, config);
    else throw ConfigError("unknown suite '" + suite + "'");
  }
}

}  // namespace

std::vector<CheckReport> run_checks(const RunConfig& config) {
  config.validate();
  std::vector<CheckReport> reports;
  Runner run(config, reports);
  register_all(run, config);
  sort_reports(reports);
  return reports;
}

std::size_t registered_check_count(const RunConfig& config) {
  static constexpr std::size_t per_suite[] = {7, 4, 5, 7, 7, 5, 9};
  static const char* names[] = {"algebra", "spinors", "field",   "volkov",
                                "orthonormality", "completeness", "appendix"};
  std::size_t total = 0;
  for (const auto& suite : config.selected_suites())
    for (std::size_t i = 0; i < 7; ++i)
      if (suite == names[i]) total += per_suite[i];
  return total;
}

std::string appendix_sweep_csv(const RunConfig& config) {
  std::ostringstream out;
  out << "n,kappa1,kappa2,sigma,value,target,error\n";
  const double sigma = config.sigma;
  const auto row = [&](int n, double k1, double k2, const ConvergenceReport& r,
                       double target) {
    const double value = (n == 1) ? std::abs(r.extrapolated) : r.extrapolated.real();
    out << n << ',' << k1 << ',' << k2 << ',' << sigma << ',' << value << ',' << target
        << ',' << std::abs(value - target) << '\n';
  };
  for (double k2 : {0.0, 0.5, 1.0, 2.0}) row(0, 0.0, k2, smeared_I0(k2, sigma), 1.0);
  for (double k : {0.0, 0.5, 1.0, 2.0}) row(1, k, k, smeared_I1(k, k, sigma), 0.0);
  for (double k1 : {0.0, 0.5, 1.0, 2.0}) row(2, k1, 0.0, smeared_I2(k1, sigma), 1.0);
  return out.str();
}

}  // namespace volkov
