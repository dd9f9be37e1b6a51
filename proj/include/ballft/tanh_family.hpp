#pragma once

#include <span>
#include <vector>

#include "ballft/ball.hpp"
#include "ballft/special.hpp"

namespace ballft {

/// Parameters of f_r(x; n, a, mu); r is the dimension of n.
struct FamilyParams {
  double a = 1.0;
  double mu = 0.5;
  MultiIndex n{0};

  int dimension() const { return n.dimension(); }
};

/// Requires a > 0, mu > -1/2, mu != 0.
void validate(const FamilyParams& params);

/// log sech x, accurate for large |x|.
double log_sech(double x);

/// upsilon_1 = tanh x_1, upsilon_j = tanh x_j prod_{k<j} sech x_k. Always inside the open ball.
std::vector<double> upsilon_map(std::span<const double> x);

/// f_r(x) = prod_j (1 - tanh^2 x_j)^{a + (r-j)/4} P_n^mu(upsilon(x)).
double f_r_eval(std::span<const double> x, const FamilyParams& params);

/// f_r through the recursion that peels x_1 (first axis) off f_{r-1}.
double f_r_via_g1(std::span<const double> x, const FamilyParams& params);

/// f_r through the recursion that peels x_r (last axis) with shifted
/// parameters a + n_r/2 + 1/4 and mu + n_r + 1/2.
double f_r_via_g2(std::span<const double> x, const FamilyParams& params);

/// Theta factor of axis `axis` (0-based; axis k carries the tail sum |n^{k+2}| in
/// 1-based notation), hypergeometric form:
///   B(A + i xi/2, A - i xi/2) 3F2(-n_k, n_k + 2(m + mu + q/2), A + i xi/2; m + mu + (q+1)/2, m + 2a + q/2; 1)
/// with m = tail_sum(k+1), q = r-1-k, A = a + m/2 + q/4.
Complex theta_factor(int axis, const FamilyParams& params, double xi);

/// Same factor written with the continuous Hahn polynomial
///   n_k! / (i^{n_k} (m+mu+(q+1)/2)_{n_k} (m+2a+q/2)_{n_k}) B(...) p_{n_k}(xi/2; A, Bh, Bh, A),
/// Bh = mu - a + (m+1)/2 + q/4.
Complex theta_factor_hahn(int axis, const FamilyParams& params, double xi);

/// Closed-form value plus the cancellation flag of its 3F2 factors.
struct FourierValue {
  Complex value;
  bool low_confidence = false;
};

/// Fourier transform of f_r (kernel e^{-i xi.x}, no 2pi normalisation):
///   2^{2ra + r(r-5)/4 + sum_j j n_{j+1}} prod_j (2(m_j + mu + q_j/2))_{n_j} / n_j! Theta_j.
/// Assembled in log space; throws OverflowError when the magnitude leaves binary64.
Complex fourier_closed_form(const FamilyParams& params, std::span<const double> xi);
FourierValue fourier_closed_form_detailed(const FamilyParams& params, std::span<const double> xi);

/// Closed form with every Theta factor in its continuous Hahn form.
Complex fourier_closed_form_hahn(const FamilyParams& params, std::span<const double> xi);

enum class PeelMode { first, last };

/// Fourier transform by repeated one-variable reduction, peeling the first
/// axis (same a, mu on the remainder) or the last axis (shifted a, mu).
/// Test path; the public evaluation path is fourier_closed_form.
Complex fourier_via_recursion(const FamilyParams& params, std::span<const double> xi, PeelMode mode);

}  // namespace ballft
