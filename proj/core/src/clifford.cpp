#include "volkov/clifford.hpp"

#include <cmath>

namespace volkov {

namespace {

SpinMatrix make_gamma0() {
  SpinMatrix m;
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 2) = -1.0;
  m(3, 3) = -1.0;
  return m;
}

// gamma^i = [[0, sigma_i], [-sigma_i, 0]]
SpinMatrix make_gamma_spatial(const std::array<cplx, 4>& sigma) {
  SpinMatrix m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      m(r, c + 2) = sigma[2 * r + c];
      m(r + 2, c) = -sigma[2 * r + c];
    }
  return m;
}

const cplx i1{0.0, 1.0};

const SpinMatrix g0 = make_gamma0();
const SpinMatrix g1 = make_gamma_spatial({0.0, 1.0, 1.0, 0.0});
const SpinMatrix g2 = make_gamma_spatial({0.0, -i1, i1, 0.0});
const SpinMatrix g3 = make_gamma_spatial({1.0, 0.0, 0.0, -1.0});

}  // namespace

const SpinMatrix& gamma(int mu) {
  switch (mu) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    default: return g3;
  }
}

SpinMatrix slash(const FourVector& v) {
  SpinMatrix m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m(r, c) = v.t * g0(r, c) - v.x * g1(r, c) - v.y * g2(r, c) - v.z * g3(r, c);
  return m;
}

SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b) {
  return a * b + b * a;
}

SpinMatrix dirac_adjoint_conjugate(const SpinMatrix& a) {
  return g0 * a.adjoint() * g0;
}

SpinMatrix matrix_exponential(const SpinMatrix& a) {
  // Scale down until the norm is small, run the Taylor series, square back up.
  int squarings = 0;
  double norm = a.max_abs();
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  const SpinMatrix s = scale * a;

  SpinMatrix result = SpinMatrix::identity();
  SpinMatrix term = SpinMatrix::identity();
  for (int n = 1; n <= 20; ++n) {
    term = (1.0 / n) * (term * s);
    result = result + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace volkov
