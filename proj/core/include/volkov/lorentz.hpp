#pragma once

#include <cmath>
#include <stdexcept>

namespace volkov {

/// Real Minkowski four-vector with metric signature (+,-,-,-).
/// Natural units throughout (hbar = c = 1).
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend FourVector operator*(double s, const FourVector& v) {
    return {s * v.t, s * v.x, s * v.y, s * v.z};
  }
  FourVector operator-() const { return {-t, -x, -y, -z}; }
};

/// a.b = a^0 b^0 - a_vec . b_vec
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// The null propagation vector k = (1,0,0,1); fixes the phase eta = t - z.
inline constexpr FourVector wave_vector_k{1.0, 0.0, 0.0, 1.0};

/// Transverse (x-y plane) pair.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, const Vec2& a) { return {s * a.x, s * a.y}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm2() const { return x * x + y * y; }
};

struct LightconeComponents {
  double minus = 0.0;  // p^0 - p_z
  double plus = 0.0;   // p^0 + p_z
};

/// Positive-energy on-shell momentum: p^0 = sqrt(m^2 + p_vec^2) > 0.
class OnShellMomentum {
 public:
  OnShellMomentum(double mass, double px, double py, double pz)
      : mass_(mass), px_(px), py_(py), pz_(pz) {
    if (mass <= 0.0) throw std::invalid_argument("OnShellMomentum: mass must be positive");
    energy_ = std::sqrt(mass * mass + px * px + py * py + pz * pz);
  }

  /// Inverts the light-cone parametrization on the p_- > 0 branch:
  /// p_z = (m^2 + p_perp^2 - p_-^2) / (2 p_-).
  static OnShellMomentum from_lightcone(double p_minus, const Vec2& p_perp, double mass) {
    if (p_minus <= 0.0)
      throw std::domain_error("from_lightcone: p_minus must be positive");
    const double pz =
        (mass * mass + p_perp.norm2() - p_minus * p_minus) / (2.0 * p_minus);
    return OnShellMomentum(mass, p_perp.x, p_perp.y, pz);
  }

  double mass() const { return mass_; }
  double energy() const { return energy_; }
  double px() const { return px_; }
  double py() const { return py_; }
  double pz() const { return pz_; }
  Vec2 perp() const { return {px_, py_}; }
  double perp2() const { return px_ * px_ + py_ * py_; }

  double p_minus() const { return energy_ - pz_; }
  double p_plus() const { return energy_ + pz_; }

  FourVector four_vector() const { return {energy_, px_, py_, pz_}; }

 private:
  double mass_;
  double px_, py_, pz_;
  double energy_;
};

inline LightconeComponents lightcone_components(const OnShellMomentum& p) {
  return {p.p_minus(), p.p_plus()};
}

}  // namespace volkov
