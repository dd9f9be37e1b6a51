#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "ballft/dfamily.hpp"
#include "ballft/errors.hpp"
#include "ballft/quadrature.hpp"
#include "ballft/special.hpp"
#include "ballft/suites.hpp"

using namespace ballft;
using std::numbers::pi;

TEST_SUITE("dfamily") {

TEST_CASE("value at a complex point") {
  const std::array<Complex, 1> x{Complex(0.4, 0.3)};
  const DParams p{0.6, 0.9, MultiIndex{2}};
  const Complex v = d_family_eval(x, p);
  const Complex ref(0.636692423415092740973, 0.435547564195138362068);
  CHECK(std::abs(v - ref) <= 1e-13 * std::abs(ref));
  CHECK(p.mu() == doctest::Approx(1.0));
}

TEST_CASE("Hahn form agrees") {
  SplitMix64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const int r = rng.integer(1, 3);
    std::vector<int> e(r);
    for (int& v : e) v = rng.integer(0, 5);
    const DParams p{rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0), MultiIndex(e)};
    std::vector<Complex> x(r);
    for (auto& z : x) z = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-3.0, 3.0));
    const Complex a = d_family_eval(x, p);
    const Complex b = d_family_eval_hahn(x, p);
    CHECK(std::abs(a - b) <= 1e-11 * std::abs(a));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(DParams{0.0, 0.5, MultiIndex{1}}), ParameterError);
  CHECK_THROWS_AS(validate(DParams{0.5, -1.0, MultiIndex{1}}), ParameterError);
}

TEST_CASE("r = 1 constant") {
  CHECK(d_orthogonality_constant(MultiIndex{0}, 0.5, 0.5) == doctest::Approx(4.0 * pi).epsilon(1e-14));
  // rD_0(i xi) rD_0(-i xi) = Gamma(1/2 + i xi/2)^2 Gamma(1/2 - i xi/2)^2 = pi^2 sech^2(pi xi / 2)
  const GatedValue q = integrate_line(
      [](double xi) {
        const std::array<Complex, 1> p{Complex(0.0, xi)}, m{Complex(0.0, -xi)};
        return d_family_eval(p, DParams{0.5, 0.5, MultiIndex{0}}) *
               d_family_eval(m, DParams{0.5, 0.5, MultiIndex{0}});
      },
      QuadratureSpec{QuadratureRule::trapezoid, 601, 30.0});
  CHECK(q.value.real() == doctest::Approx(4.0 * pi).epsilon(1e-10));
}

TEST_CASE("r <= 2 constants agree") {
  for (const MultiIndex& n : {MultiIndex{0}, MultiIndex{3}, MultiIndex{1, 2}, MultiIndex{0, 4}}) {
    CHECK(d_orthogonality_constant_parseval(n, 0.7, 1.1) ==
          doctest::Approx(d_orthogonality_constant(n, 0.7, 1.1)).epsilon(1e-12));
  }
}

TEST_CASE("r = 3 constant against a separable integral") {
  // n = 0, a1 = a2: the integrand is prod_j |Gamma(A_j + i xi/2)|^4, A = (1, 3/4, 1/2)
  const QuadratureSpec spec{QuadratureRule::trapezoid, 601, 40.0};
  double product = 1.0;
  for (double A : {1.0, 0.75, 0.5}) {
    const GatedValue q = integrate_line(
        [A](double xi) {
          const double g = std::norm(ballft::gamma(Complex(A, xi / 2.0)));
          return Complex(g * g, 0.0);
        },
        spec);
    product *= q.value.real();
  }
  const MultiIndex n{0, 0, 0};
  CHECK(product == doctest::Approx(std::pow(pi, 5) / 3.0).epsilon(1e-10));
  CHECK(d_orthogonality_constant_parseval(n, 0.5, 0.5) == doctest::Approx(product).epsilon(1e-10));
  CHECK(d_orthogonality_constant(n, 0.5, 0.5) == doctest::Approx(2.0 * product).epsilon(1e-10));
}

}
