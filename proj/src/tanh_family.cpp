#include "ballft/tanh_family.hpp"

#include <cmath>
#include <numbers>

#include "ballft/classical.hpp"
#include "ballft/errors.hpp"
#include "ballft/hypergeometric.hpp"

namespace ballft {

namespace {

constexpr Complex kI{0.0, 1.0};

struct AxisData {
  int n = 0;        // n_k
  int m = 0;        // tail sum beyond axis k
  double q = 0.0;   // r - 1 - k
  double A = 0.0;   // a + m/2 + q/4
  double lambda = 0.0;  // m + mu + q/2
};

AxisData axis_data(int axis, const FamilyParams& p) {
  const int r = p.dimension();
  if (axis < 0 || axis >= r) throw ParameterError("axis out of range");
  AxisData d;
  d.n = p.n[axis];
  d.m = p.n.tail_sum(axis + 1);
  d.q = r - 1 - axis;
  d.A = p.a + 0.5 * d.m + 0.25 * d.q;
  d.lambda = d.m + p.mu + 0.5 * d.q;
  return d;
}

struct ThetaParts {
  Complex log_beta;
  SeriesSum<Complex> series;
};

ThetaParts theta_parts(int axis, const FamilyParams& p, double xi) {
  const AxisData d = axis_data(axis, p);
  const Complex z = d.A + 0.5 * xi * kI;
  ThetaParts t;
  t.log_beta = log_beta(z, std::conj(z));
  t.series = hyp3f2_unit_detailed(d.n, 2.0 * d.lambda + d.n, z, d.lambda + 0.5,
                                  2.0 * d.A);
  return t;
}

double exponent_of_two(const FamilyParams& p) {
  const int r = p.dimension();
  double e = 2.0 * r * p.a + 0.25 * r * (r - 5);
  for (int k = 1; k < r; ++k) e += static_cast<double>(k) * p.n[k];
  return e;
}

// Fourier transform of sech^{2 alpha}(x) C_n^{(lambda)}(tanh x), plain arithmetic.
Complex one_dim_transform(int n, double alpha, double lambda, double xi) {
  const Complex z = alpha + 0.5 * xi * kI;
  const double pre = std::pow(2.0, 2.0 * alpha - 1.0) * pochhammer(2.0 * lambda, n) /
                     std::exp(log_factorial(n));
  return pre * beta(z, std::conj(z)) *
         hyp3f2_unit(n, n + 2.0 * lambda, z, 2.0 * alpha, lambda + 0.5);
}

double sech_power(double x, double power) { return std::exp(power * log_sech(x)); }

}  // namespace

void validate(const FamilyParams& params) {
  if (params.dimension() < 1) throw ParameterError("multi-index must be nonempty");
  if (!(params.a > 0.0) || !std::isfinite(params.a)) throw ParameterError("a must be positive");
  validate(BallParams{params.mu});
}

double log_sech(double x) {
  const double ax = std::fabs(x);
  return -ax + std::numbers::ln2 - std::log1p(std::exp(-2.0 * ax));
}

std::vector<double> upsilon_map(std::span<const double> x) {
  std::vector<double> u(x.size());
  double prefix = 1.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    u[k] = std::tanh(x[k]) * prefix;
    prefix *= std::exp(log_sech(x[k]));
  }
  return u;
}

double f_r_eval(std::span<const double> x, const FamilyParams& params) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(x.size()) != r) throw ParameterError("f_r: dimension mismatch");
  std::vector<double> s(x.size());
  double log_weight = 0.0;
  double log_prefix = 0.0;  // sum of log sech over earlier axes
  for (int k = 0; k < r; ++k) {
    s[k] = std::exp(2.0 * log_prefix);
    const double ls = log_sech(x[k]);
    log_weight += (2.0 * params.a + 0.5 * (r - 1 - k)) * ls;
    log_prefix += ls;
  }
  const auto u = upsilon_map(x);
  return std::exp(log_weight) * ball_basis_eval_scaled(params.n, BallParams{params.mu}, u, s);
}

double f_r_via_g1(std::span<const double> x, const FamilyParams& params) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(x.size()) != r) throw ParameterError("f_r: dimension mismatch");
  const int n1 = params.n[0];
  if (r == 1) return sech_power(x[0], 2.0 * params.a) * gegenbauer(n1, params.mu, std::tanh(x[0]));
  const int m = params.n.tail_sum(1);
  const double head = sech_power(x[0], 2.0 * params.a + m + 0.5 * (r - 1)) *
                      gegenbauer(n1, m + params.mu + 0.5 * (r - 1), std::tanh(x[0]));
  FamilyParams rest{params.a, params.mu, params.n.without_first()};
  return head * f_r_via_g1(x.subspan(1), rest);
}

double f_r_via_g2(std::span<const double> x, const FamilyParams& params) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(x.size()) != r) throw ParameterError("f_r: dimension mismatch");
  const int nr = params.n[r - 1];
  const double last = sech_power(x[r - 1], 2.0 * params.a) *
                      gegenbauer(nr, params.mu, std::tanh(x[r - 1]));
  if (r == 1) return last;
  FamilyParams rest{params.a + 0.5 * nr + 0.25, params.mu + nr + 0.5, params.n.without_last()};
  return last * f_r_via_g2(x.first(r - 1), rest);
}

Complex theta_factor(int axis, const FamilyParams& params, double xi) {
  validate(params);
  const ThetaParts t = theta_parts(axis, params, xi);
  return exp_checked(t.log_beta) * t.series.value;
}

Complex theta_factor_hahn(int axis, const FamilyParams& params, double xi) {
  validate(params);
  const AxisData d = axis_data(axis, params);
  const Complex z = d.A + 0.5 * xi * kI;
  const double bh = params.mu - params.a + 0.5 * (d.m + 1) + 0.25 * d.q;
  const HahnParameters hp{d.A, bh, bh, d.A};
  const Complex p = continuous_hahn(d.n, 0.5 * xi, hp);
  const Complex log_pre = log_factorial(d.n) - log_pochhammer(d.lambda + 0.5, d.n) -
                          log_pochhammer(2.0 * d.A, d.n);
  return exp_checked(log_pre + log_beta(z, std::conj(z))) * std::pow(-kI, d.n) * p;
}

FourierValue fourier_closed_form_detailed(const FamilyParams& params, std::span<const double> xi) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(xi.size()) != r) throw ParameterError("fourier: dimension mismatch");
  Complex log_total = exponent_of_two(params) * std::numbers::ln2;
  Complex series = 1.0;
  FourierValue out;
  for (int k = 0; k < r; ++k) {
    const AxisData d = axis_data(k, params);
    const ThetaParts t = theta_parts(k, params, xi[k]);
    log_total += log_pochhammer(2.0 * d.lambda, d.n) - log_factorial(d.n) + t.log_beta;
    series *= t.series.value;
    out.low_confidence = out.low_confidence || t.series.low_confidence();
  }
  if (log_total.real() > 700.0) throw OverflowError("fourier: closed form exceeds binary64 range");
  out.value = exp_checked(log_total) * series;
  return out;
}

Complex fourier_closed_form(const FamilyParams& params, std::span<const double> xi) {
  return fourier_closed_form_detailed(params, xi).value;
}

Complex fourier_closed_form_hahn(const FamilyParams& params, std::span<const double> xi) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(xi.size()) != r) throw ParameterError("fourier: dimension mismatch");
  Complex log_pre = exponent_of_two(params) * std::numbers::ln2;
  Complex product = 1.0;
  for (int k = 0; k < r; ++k) {
    const AxisData d = axis_data(k, params);
    log_pre += log_pochhammer(2.0 * d.lambda, d.n) - log_factorial(d.n);
    product *= theta_factor_hahn(k, params, xi[k]);
  }
  return exp_checked(log_pre) * product;
}

Complex fourier_via_recursion(const FamilyParams& params, std::span<const double> xi,
                              PeelMode mode) {
  validate(params);
  const int r = params.dimension();
  if (static_cast<int>(xi.size()) != r) throw ParameterError("fourier: dimension mismatch");
  if (r == 1) return one_dim_transform(params.n[0], params.a, params.mu, xi[0]);
  if (mode == PeelMode::first) {
    const int m = params.n.tail_sum(1);
    const Complex head = one_dim_transform(params.n[0], params.a + 0.5 * m + 0.25 * (r - 1),
                                           m + params.mu + 0.5 * (r - 1), xi[0]);
    FamilyParams rest{params.a, params.mu, params.n.without_first()};
    return head * fourier_via_recursion(rest, xi.subspan(1), mode);
  }
  const int nr = params.n[r - 1];
  const Complex last = one_dim_transform(nr, params.a, params.mu, xi[r - 1]);
  FamilyParams rest{params.a + 0.5 * nr + 0.25, params.mu + nr + 0.5, params.n.without_last()};
  return last * fourier_via_recursion(rest, xi.first(r - 1), mode);
}

}  // namespace ballft
