#include "volkov/plane_wave.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "volkov/quadrature.hpp"

namespace volkov {

namespace {
constexpr double kBlockWidth = 0.5;
constexpr double kQuadTolPerUnit = 1e-12;
}  // namespace

// Monotone block grid of accumulated integrals, anchored at eta = 0.
// cum[i] holds the accumulators at eta = +-(i+1) * kBlockWidth.
struct PlaneWaveField::Cache {
  mutable std::shared_mutex mutex;
  std::vector<Accumulators> positive;
  std::vector<Accumulators> negative;
};

PlaneWaveField::PlaneWaveField() : cache_(std::make_unique<Cache>()) {}

PlaneWaveField::PlaneWaveField(const PlaneWaveField& o)
    : shape_(o.shape_), a0_(o.a0_), omega_(o.omega_), cycles_(o.cycles_),
      length_(o.length_), charge_(o.charge_), tab_eta_(o.tab_eta_),
      tab_ax_(o.tab_ax_), tab_ay_(o.tab_ay_),
      cache_(std::make_unique<Cache>()), cache_enabled_(o.cache_enabled_) {}

PlaneWaveField& PlaneWaveField::operator=(const PlaneWaveField& o) {
  if (this != &o) {
    PlaneWaveField tmp(o);
    *this = std::move(tmp);
  }
  return *this;
}

PlaneWaveField::PlaneWaveField(PlaneWaveField&&) noexcept = default;
PlaneWaveField& PlaneWaveField::operator=(PlaneWaveField&&) noexcept = default;
PlaneWaveField::~PlaneWaveField() = default;

PlaneWaveField PlaneWaveField::zero(double charge) {
  PlaneWaveField f;
  f.shape_ = FieldShape::zero;
  f.charge_ = charge;
  return f;
}

PlaneWaveField PlaneWaveField::constant_plateau(double a0, double length, double charge) {
  if (length <= 0.0) throw std::invalid_argument("constant_plateau: length must be positive");
  PlaneWaveField f;
  f.shape_ = FieldShape::constant_plateau;
  f.a0_ = a0;
  f.length_ = length;
  f.charge_ = charge;
  return f;
}

PlaneWaveField PlaneWaveField::linear_sin2(double a0, double omega, double cycles,
                                           double charge) {
  if (omega <= 0.0 || cycles <= 0.0)
    throw std::invalid_argument("linear_sin2: omega and cycles must be positive");
  PlaneWaveField f;
  f.shape_ = FieldShape::linear_sin2;
  f.a0_ = a0;
  f.omega_ = omega;
  f.cycles_ = cycles;
  f.length_ = 2.0 * std::numbers::pi * cycles / omega;
  f.charge_ = charge;
  return f;
}

PlaneWaveField PlaneWaveField::circular_sin2(double a0, double omega, double cycles,
                                             double charge) {
  PlaneWaveField f = linear_sin2(a0, omega, cycles, charge);
  f.shape_ = FieldShape::circular_sin2;
  return f;
}

PlaneWaveField PlaneWaveField::tabulated(std::vector<double> eta, std::vector<double> ax,
                                         std::vector<double> ay, double charge) {
  if (eta.size() < 2 || eta.size() != ax.size() || eta.size() != ay.size())
    throw std::invalid_argument("tabulated: need >= 2 rows of equal length");
  for (std::size_t i = 1; i < eta.size(); ++i)
    if (eta[i] <= eta[i - 1])
      throw std::invalid_argument("tabulated: eta column must be strictly increasing");
  PlaneWaveField f;
  f.shape_ = FieldShape::tabulated;
  f.charge_ = charge;
  f.tab_eta_ = std::move(eta);
  f.tab_ax_ = std::move(ax);
  f.tab_ay_ = std::move(ay);
  return f;
}

PlaneWaveField PlaneWaveField::from_file(const std::string& path, double charge) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open field table: " + path);
  std::vector<double> eta, ax, ay;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double e, x, y;
    if (!(ss >> e)) continue;  // blank line
    if (!(ss >> x))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected at least two columns");
    if (!(ss >> y)) y = 0.0;
    eta.push_back(e);
    ax.push_back(x);
    ay.push_back(y);
  }
  return tabulated(std::move(eta), std::move(ax), std::move(ay), charge);
}

double PlaneWaveField::support_end() const {
  switch (shape_) {
    case FieldShape::zero: return 0.0;
    case FieldShape::constant_plateau:
    case FieldShape::linear_sin2:
    case FieldShape::circular_sin2: return length_;
    case FieldShape::tabulated: return tab_eta_.back();
  }
  return 0.0;
}

Vec2 PlaneWaveField::potential(double eta) const {
  switch (shape_) {
    case FieldShape::zero:
      return {};
    case FieldShape::constant_plateau:
      return (eta > 0.0 && eta < length_) ? Vec2{a0_, 0.0} : Vec2{};
    case FieldShape::linear_sin2: {
      if (eta <= 0.0 || eta >= length_) return {};
      const double env = std::sin(omega_ * eta / (2.0 * cycles_));
      return {a0_ * env * env * std::sin(omega_ * eta), 0.0};
    }
    case FieldShape::circular_sin2: {
      if (eta <= 0.0 || eta >= length_) return {};
      const double env = std::sin(omega_ * eta / (2.0 * cycles_));
      return {a0_ * env * env * std::cos(omega_ * eta),
              a0_ * env * env * std::sin(omega_ * eta)};
    }
    case FieldShape::tabulated: {
      if (eta < tab_eta_.front() || eta > tab_eta_.back())
        throw std::out_of_range("tabulated field: eta outside table range");
      const auto it = std::upper_bound(tab_eta_.begin(), tab_eta_.end(), eta);
      const std::size_t i = std::min<std::size_t>(
          tab_eta_.size() - 2, static_cast<std::size_t>(it - tab_eta_.begin()) - 1);
      const double w = (eta - tab_eta_[i]) / (tab_eta_[i + 1] - tab_eta_[i]);
      return {tab_ax_[i] + w * (tab_ax_[i + 1] - tab_ax_[i]),
              tab_ay_[i] + w * (tab_ay_[i + 1] - tab_ay_[i])};
    }
  }
  return {};
}

Vec2 PlaneWaveField::derivative(double eta) const {
  switch (shape_) {
    case FieldShape::zero:
    case FieldShape::constant_plateau:
      return {};
    case FieldShape::linear_sin2: {
      if (eta <= 0.0 || eta >= length_) return {};
      const double w0 = omega_ / (2.0 * cycles_);
      const double env = std::sin(w0 * eta);
      const double denv = 2.0 * w0 * env * std::cos(w0 * eta);
      return {a0_ * (denv * std::sin(omega_ * eta) +
                     env * env * omega_ * std::cos(omega_ * eta)),
              0.0};
    }
    case FieldShape::circular_sin2: {
      if (eta <= 0.0 || eta >= length_) return {};
      const double w0 = omega_ / (2.0 * cycles_);
      const double env = std::sin(w0 * eta);
      const double denv = 2.0 * w0 * env * std::cos(w0 * eta);
      return {a0_ * (denv * std::cos(omega_ * eta) -
                     env * env * omega_ * std::sin(omega_ * eta)),
              a0_ * (denv * std::sin(omega_ * eta) +
                     env * env * omega_ * std::cos(omega_ * eta))};
    }
    case FieldShape::tabulated: {
      if (eta < tab_eta_.front() || eta > tab_eta_.back())
        throw std::out_of_range("tabulated field: eta outside table range");
      const auto it = std::upper_bound(tab_eta_.begin(), tab_eta_.end(), eta);
      const std::size_t i = std::min<std::size_t>(
          tab_eta_.size() - 2,
          std::max<std::ptrdiff_t>(1, (it - tab_eta_.begin()) - 1));
      const std::size_t lo = i - 1, hi = std::min(i + 1, tab_eta_.size() - 1);
      const double dx = tab_eta_[hi] - tab_eta_[lo];
      return {(tab_ax_[hi] - tab_ax_[lo]) / dx, (tab_ay_[hi] - tab_ay_[lo]) / dx};
    }
  }
  return {};
}

SpinMatrix PlaneWaveField::spin_coupling(double eta) const {
  const Vec2 da = derivative(eta);
  const FourVector dA{0.0, da.x, da.y, 0.0};
  const SpinMatrix direct = slash(wave_vector_k) * slash(dA);

  // Independent route: k.Adot = 0 makes the product purely antisymmetric,
  // (1/2) F_{nu mu} gamma^nu gamma^mu with the lower-index components
  // k_mu = (1,0,0,-1), Adot_mu = (0,-dax,-day,0).
  const double k_lo[4] = {1.0, 0.0, 0.0, -1.0};
  const double a_lo[4] = {0.0, -da.x, -da.y, 0.0};
  SpinMatrix from_f;
  for (int nu = 0; nu < 4; ++nu)
    for (int mu = 0; mu < 4; ++mu) {
      const double f = k_lo[nu] * a_lo[mu] - k_lo[mu] * a_lo[nu];
      if (f == 0.0) continue;
      from_f = from_f + (0.5 * f) * (gamma(nu) * gamma(mu));
    }
  if (max_abs_diff(direct, from_f) > 1e-13)
    throw std::logic_error("spin_coupling: field-strength contraction mismatch");
  return direct;
}

PlaneWaveField::Accumulators PlaneWaveField::integrate_from(double eta0, Accumulators base,
                                                            double eta) const {
  if (eta == eta0) return base;
  const double tol = kQuadTolPerUnit * std::max(1.0, std::abs(eta - eta0));
  base.ax += integrate_adaptive([this](double e) { return potential(e).x; }, eta0, eta, tol);
  base.ay += integrate_adaptive([this](double e) { return potential(e).y; }, eta0, eta, tol);
  base.a2 += integrate_adaptive([this](double e) { return potential(e).norm2(); }, eta0, eta, tol);
  return base;
}

PlaneWaveField::Accumulators PlaneWaveField::accumulated(double eta) const {
  if (!cache_enabled_)
    return integrate_from(0.0, {}, eta);

  auto& blocks = eta >= 0.0 ? cache_->positive : cache_->negative;
  const double dir = eta >= 0.0 ? 1.0 : -1.0;
  const auto needed = static_cast<std::size_t>(std::floor(std::abs(eta) / kBlockWidth));

  {
    std::shared_lock lock(cache_->mutex);
    if (blocks.size() >= needed) {
      const Accumulators base = needed == 0 ? Accumulators{} : blocks[needed - 1];
      return integrate_from(dir * static_cast<double>(needed) * kBlockWidth, base, eta);
    }
  }
  {
    std::unique_lock lock(cache_->mutex);
    while (blocks.size() < needed) {
      const auto i = blocks.size();
      const Accumulators base = i == 0 ? Accumulators{} : blocks[i - 1];
      blocks.push_back(integrate_from(dir * static_cast<double>(i) * kBlockWidth, base,
                                      dir * static_cast<double>(i + 1) * kBlockWidth));
    }
  }
  std::shared_lock lock(cache_->mutex);
  const Accumulators base = needed == 0 ? Accumulators{} : blocks[needed - 1];
  return integrate_from(dir * static_cast<double>(needed) * kBlockWidth, base, eta);
}

double PlaneWaveField::phase_integral(double eta, const OnShellMomentum& p,
                                      Branch branch) const {
  const Accumulators acc = accumulated(eta);
  const double e = charge_;
  const double numerator = -sign(branch) * 2.0 * e * (p.px() * acc.ax + p.py() * acc.ay) +
                           e * e * acc.a2;
  const double result = numerator / (2.0 * p.p_minus());
  if (!std::isfinite(result))
    throw std::runtime_error("phase_integral: non-finite accumulator");
  return result;
}

void PlaneWaveField::enable_cache(bool on) {
  cache_enabled_ = on;
  if (!on) {
    std::unique_lock lock(cache_->mutex);
    cache_->positive.clear();
    cache_->negative.clear();
  }
}

}  // namespace volkov
