#include "ballft/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ballft/errors.hpp"

namespace ballft {

namespace {

using std::numbers::pi;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * pi);
constexpr double kMaxLog = 709.782712893384;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(pi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double c = std::cos(pi * r);
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

// log sin(pi z) for Im z >= 0, avoiding overflow of sin for large Im z.
Complex log_sin_pi(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) {
    const double s = sin_pi(x);
    return {std::log(std::abs(s)), s < 0.0 ? pi : 0.0};
  }
  if (y < 1.0) {
    const Complex s(sin_pi(x) * std::cosh(pi * y), cos_pi(x) * std::sinh(pi * y));
    return std::log(s);
  }
  // sin w = e^{-iw} (1 - e^{2iw}) i/2 with w = pi z, |e^{2iw}| = e^{-2 pi y} < 1.
  const Complex i(0.0, 1.0);
  const Complex q = std::polar(std::exp(-2.0 * pi * y), 2.0 * pi * (x - std::round(x)));
  return -i * pi * z + std::log(1.0 - q) + Complex(std::log(0.5), pi / 2.0);
}

Complex lanczos_log_gamma(Complex z) {
  // Valid for Re z >= 1/2.
  const Complex zm1 = z - 1.0;
  Complex series = kLanczos[0];
  for (std::size_t k = 1; k < kLanczos.size(); ++k) {
    series += kLanczos[k] / (zm1 + static_cast<double>(k));
  }
  const Complex t = zm1 + kLanczosG + 0.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex pochhammer(Complex base, int order) {
  if (order < 0) throw ParameterError("pochhammer: negative order");
  Complex p = 1.0;
  for (int k = 0; k < order; ++k) p *= base + static_cast<double>(k);
  if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
    throw OverflowError("pochhammer: product overflows");
  }
  return p;
}

double pochhammer(double base, int order) {
  if (order < 0) throw ParameterError("pochhammer: negative order");
  double p = 1.0;
  for (int k = 0; k < order; ++k) p *= base + k;
  if (!std::isfinite(p)) throw OverflowError("pochhammer: product overflows");
  return p;
}

Complex log_pochhammer(Complex base, int order) {
  if (order < 0) throw ParameterError("log_pochhammer: negative order");
  Complex acc = 0.0;
  for (int k = 0; k < order; ++k) {
    const Complex f = base + static_cast<double>(k);
    if (f == 0.0) throw PoleError("log_pochhammer: vanishing factor");
    acc += std::log(f);
  }
  return acc;
}

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(pi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex exp_checked(Complex log_value) {
  if (!(log_value.real() <= kMaxLog)) {
    throw OverflowError("result exceeds binary64 range (log magnitude " +
                        std::to_string(log_value.real()) + ")");
  }
  return std::exp(log_value);
}

Complex gamma(Complex z) {
  const Complex g = exp_checked(log_gamma(z));
  if (z.imag() == 0.0) return {g.real(), 0.0};
  return g;
}

double gamma(double x) { return gamma(Complex(x, 0.0)).real(); }

Complex log_beta(Complex a, Complex b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

Complex beta(Complex a, Complex b) {
  const Complex v = exp_checked(log_beta(a, b));
  if (a.imag() == 0.0 && b.imag() == 0.0) return {v.real(), 0.0};
  return v;
}

double generalized_binomial(double alpha, int k) {
  if (k < 0) throw ParameterError("generalized_binomial: negative k");
  double c = 1.0;
  for (int i = 0; i < k; ++i) c *= (alpha - i) / (i + 1);
  return c;
}

double log_factorial(int k) {
  if (k < 0) throw ParameterError("log_factorial: negative argument");
  double acc = 0.0;
  for (int i = 2; i <= k; ++i) acc += std::log(static_cast<double>(i));
  return acc;
}

}  // namespace ballft
