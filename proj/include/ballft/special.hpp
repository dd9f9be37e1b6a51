#pragma once

#include <complex>

namespace ballft {

using Complex = std::complex<double>;

/// Rising factorial (base)_order = base (base+1) ... (base+order-1); 1 when order == 0.
/// Throws OverflowError if the product leaves the finite range.
Complex pochhammer(Complex base, int order);
double pochhammer(double base, int order);

/// Logarithm of the rising factorial, accumulated as a sum of complex logs.
/// The imaginary part carries the phase (pi for a negative real product).
Complex log_pochhammer(Complex base, int order);

/// log Gamma(z). Lanczos approximation for Re z >= 1/2, reflection otherwise.
/// The real part is log|Gamma(z)|; the imaginary part is a phase of Gamma(z)
/// (it agrees with the analytic log-gamma for Re z >= 1/2).
/// Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(z) = exp(log_gamma(z)). Real z gives an exactly real result.
/// Throws PoleError at poles and OverflowError when |Gamma(z)| is not representable.
Complex gamma(Complex z);
double gamma(double x);

/// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a+b), assembled in log space.
Complex beta(Complex a, Complex b);

/// log Beta(a, b) in the same phase convention as log_gamma.
Complex log_beta(Complex a, Complex b);

/// alpha (alpha-1) ... (alpha-k+1) / k!, equal to 1 at k == 0.
double generalized_binomial(double alpha, int k);

/// log(k!) for k >= 0.
double log_factorial(int k);

/// Exponentiates an accumulated log, throwing OverflowError beyond binary64 range.
Complex exp_checked(Complex log_value);

}  // namespace ballft
