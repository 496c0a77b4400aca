#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace volkov {

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre polynomial.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  static const GaussLegendre& order(int n);
};

/// Fixed-order panel integral of f over [a, b].
template <typename F>
auto gauss_panel(F&& f, double a, double b, int order = 16) {
  const auto& gl = GaussLegendre::order(order);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto sum = decltype(f(mid)){};
  for (std::size_t i = 0; i < gl.nodes.size(); ++i)
    sum += gl.weights[i] * f(mid + half * gl.nodes[i]);
  return half * sum;
}

/// Adaptive composite Gauss-Legendre integration: a panel is accepted when
/// its value agrees with the two-half refinement to within the allotted
/// absolute tolerance, otherwise it is bisected.
template <typename F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol, int order = 16,
                        int max_depth = 40) {
  using R = decltype(f(a));
  struct Rec {
    const F& f;
    int order;
    R run(double a, double b, R whole, double tol, int depth) {
      const double mid = 0.5 * (a + b);
      const R left = gauss_panel(f, a, mid, order);
      const R right = gauss_panel(f, mid, b, order);
      const R sum = left + right;
      if (depth <= 0) throw std::runtime_error("integrate_adaptive: max depth exceeded");
      if (std::abs(sum - whole) <= tol || std::abs(b - a) < 1e-14) return sum;
      return run(a, mid, left, 0.5 * tol, depth - 1) +
             run(mid, b, right, 0.5 * tol, depth - 1);
    }
  };
  if (a == b) return R{};
  Rec rec{f, order};
  return rec.run(a, b, gauss_panel(f, a, b, order), abs_tol, max_depth);
}

}  // namespace volkov
