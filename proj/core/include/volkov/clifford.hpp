#pragma once

#include <array>
#include <complex>

#include "volkov/lorentz.hpp"

namespace volkov {

using cplx = std::complex<double>;

/// Dense 4x4 complex matrix, row-major. Closes under product, sum,
/// scalar multiple and conjugate transpose; comparisons use the
/// entrywise max-abs norm.
class SpinMatrix {
 public:
  SpinMatrix() = default;

  static SpinMatrix zero() { return SpinMatrix{}; }
  static SpinMatrix identity() {
    SpinMatrix m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx& operator()(int r, int c) { return e_[4 * r + c]; }
  const cplx& operator()(int r, int c) const { return e_[4 * r + c]; }

  SpinMatrix operator+(const SpinMatrix& o) const {
    SpinMatrix m;
    for (int i = 0; i < 16; ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }
  SpinMatrix operator-(const SpinMatrix& o) const {
    SpinMatrix m;
    for (int i = 0; i < 16; ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
  }
  SpinMatrix operator-() const {
    SpinMatrix m;
    for (int i = 0; i < 16; ++i) m.e_[i] = -e_[i];
    return m;
  }
  SpinMatrix operator*(const SpinMatrix& o) const {
    SpinMatrix m;
    for (int r = 0; r < 4; ++r)
      for (int k = 0; k < 4; ++k) {
        const cplx a = e_[4 * r + k];
        for (int c = 0; c < 4; ++c) m.e_[4 * r + c] += a * o.e_[4 * k + c];
      }
    return m;
  }
  friend SpinMatrix operator*(const cplx& s, const SpinMatrix& m) {
    SpinMatrix r;
    for (int i = 0; i < 16; ++i) r.e_[i] = s * m.e_[i];
    return r;
  }
  friend SpinMatrix operator*(double s, const SpinMatrix& m) { return cplx(s) * m; }

  SpinMatrix adjoint() const {
    SpinMatrix m;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  cplx trace() const { return e_[0] + e_[5] + e_[10] + e_[15]; }

  double max_abs() const {
    double v = 0.0;
    for (const auto& x : e_) v = std::max(v, std::abs(x));
    return v;
  }

 private:
  std::array<cplx, 16> e_{};
};

inline double max_abs_diff(const SpinMatrix& a, const SpinMatrix& b) {
  return (a - b).max_abs();
}

/// Gamma matrices in the standard (Dirac) representation,
/// gamma^mu = (beta, beta alpha_vec). Built once as shared constants.
const SpinMatrix& gamma(int mu);

/// gamma^mu v_mu = v^0 g0 - v_x g1 - v_y g2 - v_z g3.
SpinMatrix slash(const FourVector& v);

/// ab + ba
SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b);

/// gamma^0 a^dagger gamma^0
SpinMatrix dirac_adjoint_conjugate(const SpinMatrix& a);

/// Matrix exponential by scaling and squaring; used as an independent
/// route against truncated nilpotent expansions.
SpinMatrix matrix_exponential(const SpinMatrix& a);

/// 4-component complex column vector (Dirac amplitude).
struct BiSpinor {
  std::array<cplx, 4> c{};

  cplx& operator[](int i) { return c[i]; }
  const cplx& operator[](int i) const { return c[i]; }

  friend BiSpinor operator*(const SpinMatrix& m, const BiSpinor& v) {
    BiSpinor r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.c[i] += m(i, j) * v.c[j];
    return r;
  }
  friend BiSpinor operator*(const cplx& s, const BiSpinor& v) {
    BiSpinor r;
    for (int i = 0; i < 4; ++i) r.c[i] = s * v.c[i];
    return r;
  }
  friend BiSpinor operator-(const BiSpinor& a, const BiSpinor& b) {
    BiSpinor r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend BiSpinor operator+(const BiSpinor& a, const BiSpinor& b) {
    BiSpinor r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }

  double norm() const {
    double s = 0.0;
    for (const auto& x : c) s += std::norm(x);
    return std::sqrt(s);
  }
};

/// a^dagger b
inline cplx inner(const BiSpinor& a, const BiSpinor& b) {
  cplx s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::conj(a.c[i]) * b.c[i];
  return s;
}

/// a b^dagger
inline SpinMatrix outer(const BiSpinor& a, const BiSpinor& b) {
  SpinMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = a.c[r] * std::conj(b.c[c]);
  return m;
}

}  // namespace volkov
