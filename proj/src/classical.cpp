#include "ballft/classical.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ballft/errors.hpp"
#include "ballft/hypergeometric.hpp"

namespace ballft {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > -0.5) || lambda == 0.0) {
    throw ParameterError("gegenbauer: lambda must satisfy lambda > -1/2, lambda != 0 (got " +
                         std::to_string(lambda) + ")");
  }
}

void check_degree(int n) {
  if (n < 0) throw ParameterError("negative polynomial degree");
}

template <class T>
T gegenbauer_impl(int n, double lambda, T x) {
  check_degree(n);
  check_lambda(lambda);
  if (n == 0) return T(1);
  const T num[2] = {T(-n), T(n + 2.0 * lambda)};
  const T den[1] = {T(lambda + 0.5)};
  const T z = (T(1) - x) / 2.0;
  const T f = detail::terminating_sum<T>(num, den, z, n).value;
  double rising = 1.0, factorial = 1.0;  // (2 lambda)_n and n!
  for (int k = 0; k < n; ++k) {
    rising *= 2.0 * lambda + k;
    factorial *= k + 1;
  }
  const double prefactor = rising / factorial;
  if (!std::isfinite(prefactor)) throw OverflowError("gegenbauer: prefactor overflows");
  return prefactor * f;
}

}  // namespace

double jacobi(int n, double alpha, double beta, double x) {
  check_degree(n);
  if (!(alpha > -1.0) || !(beta > -1.0)) {
    throw ParameterError("jacobi: alpha, beta must exceed -1");
  }
  // Long double accumulation keeps the cross-check route well below double roundoff.
  long double sum = 0.0L;
  const long double xp = static_cast<long double>(x) + 1.0L;
  const long double xm = static_cast<long double>(x) - 1.0L;
  for (int k = 0; k <= n; ++k) {
    long double ck = 1.0L;
    for (int i = 0; i < k; ++i) ck *= (n + static_cast<long double>(alpha) - i) / (i + 1);
    long double cnk = 1.0L;
    for (int i = 0; i < n - k; ++i) cnk *= (n + static_cast<long double>(beta) - i) / (i + 1);
    long double pw = 1.0L;
    for (int i = 0; i < k; ++i) pw *= xp;
    for (int i = 0; i < n - k; ++i) pw *= xm;
    sum += ck * cnk * pw;
  }
  return static_cast<double>(std::ldexp(sum, -n));
}

double gegenbauer(int n, double lambda, double x) {
  // the alternating 2F1 sum is accumulated in extended precision
  return static_cast<double>(gegenbauer_impl<long double>(n, lambda, x));
}

Complex gegenbauer(int n, double lambda, Complex x) {
  return gegenbauer_impl<Complex>(n, lambda, x);
}

double gegenbauer_norm(int n, double lambda) {
  check_degree(n);
  check_lambda(lambda);
  // (2 lambda)_n Gamma(lambda+1/2) Gamma(1/2) / (n! (n+lambda) Gamma(lambda))
  const Complex lg = log_pochhammer(2.0 * lambda, n) + log_gamma(lambda + 0.5) +
                     log_gamma(0.5) - log_factorial(n) - std::log(Complex(n + lambda)) -
                     log_gamma(lambda);
  return exp_checked(lg).real();
}

Complex continuous_hahn(int n, Complex x, const HahnParameters& p) {
  check_degree(n);
  const Complex i(0.0, 1.0);
  const Complex s = hyp3f2_unit(n, static_cast<double>(n) + p.a + p.b + p.c + p.d - 1.0,
                                p.a + i * x, p.a + p.c, p.a + p.d);
  Complex phase = 1.0;
  for (int k = 0; k < n % 4; ++k) phase *= i;
  return phase * pochhammer(p.a + p.c, n) * pochhammer(p.a + p.d, n) /
         std::exp(log_factorial(n)) * s;
}

double hahn_weight(double x, double a1, double a2) {
  // |Gamma(a1+ix)|^2 |Gamma(a2+ix)|^2, exact conjugate pairs.
  const Complex l = log_gamma(Complex(a1, x)) + log_gamma(Complex(a2, x));
  return std::exp(2.0 * l.real());
}

double hahn_orthogonality_constant(int n, double a1, double a2) {
  check_degree(n);
  if (!(a1 > 0.0) || !(a2 > 0.0)) {
    throw ParameterError("hahn_orthogonality_constant: a1, a2 must be positive");
  }
  const double s = a1 + a2;
  const Complex lg = std::log(std::numbers::pi) + log_gamma(2.0 * a1 + n) +
                     log_gamma(2.0 * a2 + n) + 2.0 * log_gamma(s + n) - log_factorial(n) -
                     std::log(Complex(n + s - 0.5)) - log_gamma(2.0 * s + n - 1.0);
  return exp_checked(lg).real();
}

}  // namespace ballft
