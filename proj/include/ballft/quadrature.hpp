#pragma once

#include <functional>
#include <span>
#include <vector>

#include "ballft/ball.hpp"
#include "ballft/special.hpp"
#include "ballft/tanh_family.hpp"

namespace ballft {

enum class QuadratureRule {
  gauss_legendre,  // composite Gauss-Legendre on [-T, T]
  trapezoid,       // equispaced nodes in x, i.e. a uniform grid in atanh(u)
};

/// Base rule for a real-line integral over [-T, T]. For gauss_legendre,
/// nodes_per_axis counts nodes per panel; for trapezoid, nodes over the whole
/// interval (odd, so the grid contains 0). Engines evaluate the base rule and
/// the rule with twice as many nodes and report the change between them.
struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::trapezoid;
  int nodes_per_axis = 201;
  double truncation_halfwidth = 25.0;
  int panels = 64;
};

void validate(const QuadratureSpec& spec);

struct NodeSet {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Jacobi rule for (1-x)^alpha (1+x)^beta on [-1, 1], ascending nodes.
NodeSet gauss_jacobi(int n, double alpha, double beta);
NodeSet gauss_legendre(int n);

/// Nodes and weights of the rule on [-halfwidth, halfwidth]; `doubled` selects the refined rule.
NodeSet line_rule(const QuadratureSpec& spec, double halfwidth, bool doubled);

/// One axis of a nested grid: refined-rule nodes and weights, plus the base-rule
/// weights on the same nodes (zero where a node is not in the base rule).
struct AxisGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> base_weights;
};

/// Nested trapezoid axis over [-halfwidth, halfwidth] with the step of `spec`.
AxisGrid nested_axis_grid(const QuadratureSpec& spec, double halfwidth);

/// Integral from the refined rule, with the base-rule value kept for the stability gate.
struct GatedValue {
  Complex value;
  Complex base;

  double change() const { return std::abs(value - base); }
};

/// Fixed-shape pairwise summation.
Complex pairwise_sum(std::span<const Complex> values);
double pairwise_sum(std::span<const double> values);

/// Tensor-product sum of samples (flattened, last axis fastest) against both weight sets.
GatedValue tensor_sum(std::span<const AxisGrid> axes, std::span<const Complex> samples);

/// Integral of f over [-T, T]. Throws NonFiniteIntegrandError on a non-finite sample.
GatedValue integrate_line(const std::function<Complex(double)>& f, const QuadratureSpec& spec);

/// Numerical Fourier transform of f_r at several frequencies from one tabulation.
/// Axis k (0-based) is truncated to T / max(1, 2a + (r-1-k)/2), matching its decay rate.
std::vector<GatedValue> fourier_numeric_batch(const FamilyParams& params,
                                              std::span<const std::vector<double>> xis,
                                              const QuadratureSpec& spec);
GatedValue fourier_numeric(const FamilyParams& params, std::span<const double> xi,
                           const QuadratureSpec& spec);

/// <P_n, P_m>_mu by Gauss-Jacobi in the nested coordinates x_1 = t_1,
/// x_k = t_k sqrt(1 - |x_{k-1}|^2); axis k carries the weight (1-t^2)^{mu - 1/2 + (r-1-k)/2}.
double ball_inner_product_numeric(const MultiIndex& n, const MultiIndex& m, const BallParams& params,
                                  int nodes_per_axis = 16);

/// Both sides of the Parseval identity for f = f_r(.; n, a1, mu), g = f_r(.; m, a2, mu),
/// mu = a1 + a2 - 1/2:
///   spatial  = (2pi)^r int f g dx        (trapezoid in x, spec_x)
///   spectral = int F[f] conj(F[g]) dxi   (closed forms, trapezoid in xi, spec_xi)
struct ParsevalSides {
  GatedValue spatial;
  GatedValue spectral;
};

ParsevalSides parseval_check(const MultiIndex& n, const MultiIndex& m, double a1, double a2,
                             const QuadratureSpec& spec_x, const QuadratureSpec& spec_xi);

}  // namespace ballft
