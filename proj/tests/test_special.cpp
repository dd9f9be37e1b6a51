#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ballft/errors.hpp"
#include "ballft/special.hpp"

using namespace ballft;

namespace {

// mpmath, 30 digits
struct GammaRef {
  Complex z;
  Complex value;
};
const GammaRef kGamma[] = {
    {{1.0, 1.0}, {0.49801566811835604271, -0.15494982830181068512}},
    {{-2.5, 3.0}, {0.00047978841084189701217, 0.00029885571114485886816}},
    {{0.3, -7.0}, {0.000028487579955011350965, -7.7289635745084296675e-7}},
    {{7.25, 0.5}, {654.51591067055711696, 926.34072662974291026}},
    {{-4.7, -0.2}, {-0.041321194040715476046, -0.0022494518990053326608}},
    {{0.5, 20.0}, {-3.4307841591454817532e-14, 4.5428803574633433635e-14}},
};

}  // namespace

TEST_SUITE("special") {

TEST_CASE("gamma at complex points") {
  for (const auto& g : kGamma) {
    const Complex v = ballft::gamma(g.z);
    CHECK(std::abs(v - g.value) <= 1e-13 * std::abs(g.value));
  }
}

TEST_CASE("gamma on the real line") {
  CHECK(ballft::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(ballft::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(ballft::gamma(-0.5) == doctest::Approx(-2.0 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(ballft::gamma(Complex(3.5, 0.0)).imag() == 0.0);
  CHECK(log_gamma(Complex(0.5, 0.0)).real() == doctest::Approx(0.57236494292470008707).epsilon(1e-15));
}

TEST_CASE("poles and overflow") {
  CHECK_THROWS_AS(ballft::gamma(0.0), PoleError);
  CHECK_THROWS_AS(ballft::gamma(Complex(-3.0, 0.0)), PoleError);
  CHECK_THROWS_AS(ballft::gamma(200.0), OverflowError);
  CHECK_NOTHROW(log_gamma(Complex(200.0, 0.0)));
}

TEST_CASE("reflection") {
  const Complex z(0.3, 1.7);
  const Complex lhs = ballft::gamma(z) * ballft::gamma(1.0 - z);
  const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
  CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(0.5, 2) == 0.75);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(7.3, 0) == 1.0);
  const Complex p = pochhammer(Complex(0.5, 1.0), 3);
  const Complex q = Complex(0.5, 1.0) * Complex(1.5, 1.0) * Complex(2.5, 1.0);
  CHECK(std::abs(p - q) < 1e-14);
  const Complex lp = log_pochhammer(Complex(0.5, 1.0), 3);
  CHECK(std::abs(std::exp(lp) - q) < 1e-13);
}

TEST_CASE("beta and binomial") {
  CHECK(beta(Complex(2.0), Complex(3.0)).real() == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  const Complex a(1.2, 0.4), b(0.7, -0.9);
  const Complex ratio = ballft::gamma(a) * ballft::gamma(b) / ballft::gamma(a + b);
  CHECK(std::abs(beta(a, b) - ratio) <= 1e-13 * std::abs(ratio));
  CHECK(generalized_binomial(2.5, 2) == doctest::Approx(1.875).epsilon(1e-15));
  CHECK(generalized_binomial(-1.0, 3) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(generalized_binomial(4.0, 0) == 1.0);
  CHECK(log_factorial(10) == doctest::Approx(std::log(3628800.0)).epsilon(1e-15));
}

TEST_CASE("exp_checked") {
  CHECK_THROWS_AS(exp_checked(Complex(800.0, 0.0)), OverflowError);
  CHECK(std::abs(exp_checked(Complex(0.0, std::numbers::pi)) + 1.0) < 1e-15);
}

}
