#include "ballft/dfamily.hpp"

#include <cmath>
#include <numbers>

#include "ballft/classical.hpp"
#include "ballft/errors.hpp"
#include "ballft/hypergeometric.hpp"

namespace ballft {

namespace {

constexpr Complex kI{0.0, 1.0};

struct Axis {
  int n, m;
  double q, A1, A2, lambda;
};

Axis axis_of(const MultiIndex& n, int k, double a1, double a2) {
  const int r = n.dimension();
  Axis ax{};
  ax.n = n[k];
  ax.m = n.tail_sum(k + 1);
  ax.q = r - 1 - k;
  ax.A1 = a1 + 0.5 * ax.m + 0.25 * ax.q;
  ax.A2 = a2 + 0.5 * ax.m + 0.25 * ax.q;
  ax.lambda = ax.m + a1 + a2 - 0.5 + 0.5 * ax.q;
  return ax;
}

void check_args(const MultiIndex& n, double a1, double a2) {
  if (n.dimension() < 1) throw ParameterError("multi-index must be nonempty");
  if (!(a1 > 0.0) || !(a2 > 0.0) || !std::isfinite(a1) || !std::isfinite(a2))
    throw ParameterError("a1 and a2 must be positive");
}

}  // namespace

void validate(const DParams& params) { check_args(params.n, params.a1, params.a2); }

Complex d_family_eval(std::span<const Complex> x, const DParams& params) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(x.size()) != r) throw ParameterError("D family: dimension mismatch");
  const double abs_a = params.a1 + params.a2;
  Complex log_gammas = 0.0;
  Complex series = 1.0;
  for (int k = 0; k < r; ++k) {
    const Axis ax = axis_of(params.n, k, params.a1, params.a2);
    const Complex plus = ax.A1 + 0.5 * x[k];
    const Complex minus = ax.A1 - 0.5 * x[k];
    log_gammas += log_gamma(plus) + log_gamma(minus);
    series *= hyp3f2_unit(ax.n, ax.n + 2.0 * (ax.m + abs_a + 0.5 * (ax.q - 1)), plus,
                          ax.m + abs_a + 0.5 * ax.q, ax.m + 2.0 * params.a1 + 0.5 * ax.q);
  }
  return exp_checked(log_gammas) * series;
}

Complex d_family_eval_hahn(std::span<const Complex> x, const DParams& params) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(x.size()) != r) throw ParameterError("D family: dimension mismatch");
  Complex log_pre = 0.0;
  Complex product = 1.0;
  for (int k = 0; k < r; ++k) {
    const Axis ax = axis_of(params.n, k, params.a1, params.a2);
    log_pre += log_gamma(ax.A1 + 0.5 * x[k]) + log_gamma(ax.A1 - 0.5 * x[k]) +
               log_factorial(ax.n) - log_pochhammer(ax.A1 + ax.A2, ax.n) -
               log_pochhammer(2.0 * ax.A1, ax.n);
    const HahnParameters hp{ax.A1, ax.A2, ax.A2, ax.A1};
    product *= std::pow(-kI, ax.n) * continuous_hahn(ax.n, -0.5 * kI * x[k], hp);
  }
  return exp_checked(log_pre) * product;
}

double d_orthogonality_constant(const MultiIndex& n, double a1, double a2) {
  check_args(n, a1, a2);
  const int r = n.dimension();
  const double abs_a = a1 + a2;
  double log_c = r * std::log(2.0 * std::numbers::pi) +
                 (-2.0 * r * abs_a + r + 1) * std::numbers::ln2 +
                 std::log(ball_norm(n, BallParams{abs_a - 0.5}));
  for (int k = 0; k < r; ++k) {
    const int nj = n[k];
    const int m = n.tail_sum(k + 1);
    const double q = r - 1 - k;
    log_c += 2.0 * log_factorial(nj) + std::lgamma(m + 2.0 * a1 + 0.5 * q) +
             std::lgamma(m + 2.0 * a2 + 0.5 * q) - 2.0 * m * std::numbers::ln2 -
             2.0 * log_pochhammer(2.0 * m + 2.0 * abs_a + q - 1.0, nj).real();
  }
  return std::exp(log_c);
}

double d_orthogonality_constant_parseval(const MultiIndex& n, double a1, double a2) {
  check_args(n, a1, a2);
  const int r = n.dimension();
  // exponents of two in the Fourier closed forms of f_r(.; n, a1, mu) and f_r(.; n, a2, mu)
  double two_power = 2.0 * r * (a1 + a2) + 0.5 * r * (r - 5);
  for (int k = 1; k < r; ++k) two_power += 2.0 * k * n[k];
  double log_c = r * std::log(2.0 * std::numbers::pi) +
                 std::log(ball_norm(n, BallParams{a1 + a2 - 0.5})) -
                 two_power * std::numbers::ln2;
  for (int k = 0; k < r; ++k) {
    const Axis ax = axis_of(n, k, a1, a2);
    log_c += std::lgamma(2.0 * ax.A1) + std::lgamma(2.0 * ax.A2) +
             2.0 * (log_factorial(ax.n) - log_pochhammer(2.0 * ax.lambda, ax.n).real());
  }
  return std::exp(log_c);
}

}  // namespace ballft
