#pragma once

#include "ballft/special.hpp"

namespace ballft {

/// Jacobi polynomial P_n^{(alpha,beta)}(x) from its explicit binomial sum
/// 2^{-n} sum_k C(n+alpha,k) C(n+beta,n-k) (x+1)^k (x-1)^{n-k}.
/// Requires alpha, beta > -1.
double jacobi(int n, double alpha, double beta, double x);

/// Gegenbauer polynomial C_n^{(lambda)}(x) = (2 lambda)_n / n! 2F1(-n, n+2 lambda; lambda+1/2; (1-x)/2).
/// Requires lambda > -1/2 and lambda != 0.
double gegenbauer(int n, double lambda, double x);
Complex gegenbauer(int n, double lambda, Complex x);

/// Squared norm h_n^lambda of C_n^{(lambda)} under the weight (1-x^2)^{lambda-1/2}.
double gegenbauer_norm(int n, double lambda);

/// Parameters (a, b, c, d) of the continuous Hahn polynomial p_n(x; a, b, c, d).
/// Evaluation accepts any values for which a+c and a+d avoid the nonpositive
/// integers; the orthogonality statements need positive real parts.
struct HahnParameters {
  Complex a, b, c, d;

  bool has_positive_real_parts() const {
    return a.real() > 0 && b.real() > 0 && c.real() > 0 && d.real() > 0;
  }
};

/// p_n(x; a,b,c,d) = i^n (a+c)_n (a+d)_n / n! 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1).
/// Accepts complex x.
Complex continuous_hahn(int n, Complex x, const HahnParameters& params);

/// Weight Gamma(a1+ix) Gamma(a1-ix) Gamma(a2+ix) Gamma(a2-ix) of the symmetric
/// continuous Hahn family p_n(x; a1, a2, a2, a1), real x.
double hahn_weight(double x, double a1, double a2);

/// Integral of hahn_weight * p_n^2 over the real line for p_n(x; a1, a2, a2, a1):
///   pi Gamma(2a1+n) Gamma(2a2+n) Gamma(a1+a2+n)^2 / (n! (n+a1+a2-1/2) Gamma(2a1+2a2+n-1)).
double hahn_orthogonality_constant(int n, double a1, double a2);

}  // namespace ballft
