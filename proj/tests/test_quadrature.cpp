#include <cmath>
#include <numbers>

#include "doctest.h"
#include "volkov/quadrature.hpp"

using namespace volkov;

TEST_CASE("Gauss-Legendre nodes are symmetric with unit weight sum") {
  for (int order : {4, 8, 16, 32}) {
    const auto& gl = GaussLegendre::order(order);
    REQUIRE(gl.nodes.size() == static_cast<std::size_t>(order));
    double wsum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      wsum += gl.weights[i];
      CHECK(gl.nodes[i] == doctest::Approx(-gl.nodes[order - 1 - i]).epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("a single order-n panel is exact for polynomials up to degree 2n-1") {
  // int_0^1 x^k dx = 1/(k+1)
  for (int k = 0; k < 32; ++k) {
    const double got = gauss_panel([k](double x) { return std::pow(x, k); }, 0.0, 1.0, 16);
    CHECK(got == doctest::Approx(1.0 / (k + 1)).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration of a long oscillatory tail") {
  const double got =
      integrate_adaptive([](double x) { return std::sin(x); }, 0.0, 41.0, 1e-12);
  CHECK(got == doctest::Approx(1.0 - std::cos(41.0)).epsilon(1e-12));
}

TEST_CASE("adaptive integration handles reversed bounds with a sign flip") {
  const auto f = [](double x) { return x * x; };
  const double forward = integrate_adaptive(f, 0.0, 2.0, 1e-12);
  const double backward = integrate_adaptive(f, 2.0, 0.0, 1e-12);
  CHECK(forward == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
  CHECK(backward == doctest::Approx(-8.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("degenerate interval integrates to zero") {
  CHECK(integrate_adaptive([](double x) { return std::exp(x); }, 1.5, 1.5, 1e-12) == 0.0);
}

TEST_CASE("Gaussian integral against the closed form") {
  const double got = integrate_adaptive(
      [](double x) { return std::exp(-0.5 * x * x); }, -40.0, 40.0, 1e-12);
  CHECK(got == doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
}
