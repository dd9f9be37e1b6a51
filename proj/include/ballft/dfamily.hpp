#pragma once

#include <span>

#include "ballft/ball.hpp"
#include "ballft/special.hpp"

namespace ballft {

/// Parameters of the family rD_n(x; a1, a2). The underlying ball weight has
/// mu = a1 + a2 - 1/2.
struct DParams {
  double a1 = 0.5;
  double a2 = 0.5;
  MultiIndex n{0};

  int dimension() const { return n.dimension(); }
  double mu() const { return a1 + a2 - 0.5; }
};

void validate(const DParams& params);

/// prod_j Gamma(A_j - x_j/2) Gamma(A_j + x_j/2)
///   3F2(-n_j, n_j + 2(m_j + |a| + (q_j-1)/2), A_j + x_j/2; m_j + |a| + q_j/2, m_j + 2a1 + q_j/2; 1)
/// with m_j the tail sum beyond axis j, q_j = r - j (1-based j), A_j = a1 + m_j/2 + q_j/4.
Complex d_family_eval(std::span<const Complex> x, const DParams& params);

/// Same product with each factor written as
///   n_j! i^{-n_j} / ((A1+A2)_{n_j} (2 A1)_{n_j}) Gamma-pair p_{n_j}(-i x_j/2; A1, A2, A2, A1),
/// A_k = a_k + m_j/2 + q_j/4.
Complex d_family_eval_hahn(std::span<const Complex> x, const DParams& params);

/// Constant of the pairing  int rD_n(ix; a1, a2) rD_n(-ix; a2, a1) dx  in the closed form
///   (2pi)^r 2^{-2r|a|+r+1} h_n^{|a|-1/2}
///   prod_j (n_j!)^2 Gamma(m_j+2a1+q_j/2) Gamma(m_j+2a2+q_j/2) / (2^{2 m_j} ((2m_j+2|a|+q_j-1)_{n_j})^2).
double d_orthogonality_constant(const MultiIndex& n, double a1, double a2);

/// The pairing constant obtained by pushing the ball norm through the Parseval
/// identity with the Fourier closed form. Agrees with d_orthogonality_constant
/// for r <= 2; for r >= 3 the two differ by 2^{(r-1)(r-2)/2} and this one
/// matches direct quadrature.
double d_orthogonality_constant_parseval(const MultiIndex& n, double a1, double a2);

}  // namespace ballft
