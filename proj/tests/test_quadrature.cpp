#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "ballft/ball.hpp"
#include "ballft/errors.hpp"
#include "ballft/quadrature.hpp"
#include "ballft/tanh_family.hpp"

using namespace ballft;
using std::numbers::pi;

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Jacobi exactness") {
  const NodeSet g = gauss_jacobi(10, 0.5, -0.3);
  // int (1-x)^a (1+x)^b dx = 2^{a+b+1} B(a+1, b+1)
  double s = 0.0;
  for (double w : g.weights) s += w;
  const double ref = std::pow(2.0, 1.2) * std::tgamma(1.5) * std::tgamma(0.7) / std::tgamma(2.2);
  CHECK(s == doctest::Approx(ref).epsilon(1e-14));
  for (std::size_t i = 1; i < g.nodes.size(); ++i) CHECK(g.nodes[i - 1] < g.nodes[i]);
  const NodeSet l = gauss_legendre(8);
  double m = 0.0;
  for (std::size_t i = 0; i < l.nodes.size(); ++i) m += l.weights[i] * std::pow(l.nodes[i], 14);
  CHECK(m == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("line integrals") {
  const QuadratureSpec gl{QuadratureRule::gauss_legendre, 20, 40.0, 64};
  const GatedValue a = integrate_line([](double x) { return Complex(1.0 / std::cosh(x)); }, gl);
  CHECK(a.value.real() == doctest::Approx(pi).epsilon(1e-12));
  const GatedValue b = integrate_line(
      [](double x) {
        const double s = 1.0 / std::cosh(pi * x / 2.0);
        return Complex(s * s);
      },
      gl);
  CHECK(b.value.real() == doctest::Approx(4.0 / pi).epsilon(1e-12));
  const QuadratureSpec tz{QuadratureRule::trapezoid, 401, 40.0};
  const GatedValue c = integrate_line([](double x) { return Complex(1.0 / std::cosh(x)); }, tz);
  CHECK(c.value.real() == doctest::Approx(pi).epsilon(1e-13));
  CHECK(c.change() < 1e-12);
}

TEST_CASE("non-finite samples") {
  CHECK_THROWS_AS(integrate_line([](double) { return Complex(NAN); }, QuadratureSpec{}), NonFiniteIntegrandError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(validate(QuadratureSpec{QuadratureRule::trapezoid, 200, 25.0}), ParameterError);
  CHECK_THROWS_AS(validate(QuadratureSpec{QuadratureRule::trapezoid, 201, -1.0}), ParameterError);
  CHECK_NOTHROW(validate(QuadratureSpec{}));
}

TEST_CASE("nested grid") {
  // truncated infinite-line rule: uniform weights, no end corrections
  const AxisGrid g = nested_axis_grid(QuadratureSpec{QuadratureRule::trapezoid, 5, 2.0}, 2.0);
  REQUIRE(g.nodes.size() == 9);
  CHECK(g.nodes.front() == -2.0);
  CHECK(g.nodes[4] == 0.0);
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    CHECK(g.weights[i] == 0.5);
    CHECK(g.base_weights[i] == (i % 2 == 0 ? 1.0 : 0.0));
  }
}

TEST_CASE("pairwise sum") {
  std::vector<double> v(1000, 0.1);
  CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(pairwise_sum(std::span<const double>()) == 0.0);
}

TEST_CASE("tanh rule against direct Gauss-Legendre") {
  const FamilyParams p{0.8, 1.2, MultiIndex{3}};
  const std::array<double, 1> xi{0.9};
  const GatedValue t = fourier_numeric(p, xi, QuadratureSpec{QuadratureRule::trapezoid, 281, 28.0});
  const GatedValue g = integrate_line(
      [&](double x) {
        const std::array<double, 1> pt{x};
        return f_r_eval(pt, p) * std::exp(Complex(0.0, -0.9 * x));
      },
      QuadratureSpec{QuadratureRule::gauss_legendre, 20, 40.0, 64});
  CHECK(std::abs(t.value - g.value) <= 1e-9 * std::abs(g.value));
}

TEST_CASE("Parseval, r = 1") {
  const QuadratureSpec sx{QuadratureRule::trapezoid, 401, 25.0};
  const QuadratureSpec sxi{QuadratureRule::trapezoid, 241, 30.0};
  const ParsevalSides d = parseval_check(MultiIndex{2}, MultiIndex{2}, 0.5, 0.5, sx, sxi);
  CHECK(std::abs(d.spatial.value - d.spectral.value) <= 1e-8 * std::abs(d.spatial.value));
  // (2 pi) h_2 with mu = 1/2
  const double h = ball_norm(MultiIndex{2}, BallParams{0.5});
  CHECK(d.spatial.value.real() == doctest::Approx(2.0 * pi * h).epsilon(1e-8));
  const ParsevalSides o = parseval_check(MultiIndex{1}, MultiIndex{3}, 1.0, 0.75, sx, sxi);
  CHECK(std::abs(o.spatial.value) < 1e-8);
  CHECK(std::abs(o.spectral.value) < 1e-8);
}

TEST_CASE("ball inner products") {
  const BallParams p{1.5};
  CHECK(std::abs(ball_inner_product_numeric(MultiIndex{1, 0}, MultiIndex{0, 1}, p)) < 1e-13);
  CHECK(ball_inner_product_numeric(MultiIndex{0, 0}, MultiIndex{0, 0}, p) ==
        doctest::Approx(ball_norm(MultiIndex{0, 0}, p)).epsilon(1e-12));
}

}
