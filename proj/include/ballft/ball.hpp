#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ballft {

/// Multi-index n = (n_1, ..., n_r) of nonnegative integers.
///
/// Indexing is 0-based: entry(k) is n_{k+1}. tail_sum(k) is the sum of
/// entries k..r-1, so tail_sum(0) = |n| and tail_sum(r) = 0. In the usual
/// 1-based notation, |n^{j+1}| for axis j is tail_sum(j).
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  int dimension() const { return static_cast<int>(entries_.size()); }
  int operator[](int k) const { return entries_[static_cast<std::size_t>(k)]; }
  int tail_sum(int k) const;
  int total_degree() const { return tail_sum(0); }
  const std::vector<int>& entries() const { return entries_; }

  /// Drops the first / last entry.
  MultiIndex without_first() const;
  MultiIndex without_last() const;

  /// Comma-separated form, e.g. "1,0,2".
  std::string to_string() const;
  static MultiIndex parse(const std::string& text);

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

/// Weight parameter mu of W_mu(x) = (1 - |x|^2)^{mu - 1/2}; mu > -1/2, mu != 0.
struct BallParams {
  double mu = 0.5;
};

void validate(const BallParams& params);

/// dim V_n^r = binom(n+r-1, n).
std::uint64_t ball_space_dim(int n, int r);

/// Every multi-index of dimension r and total degree n, lexicographically ordered.
std::vector<MultiIndex> enumerate_multi_indices(int r, int n);

/// All multi-indices of dimension r with total degree <= max_degree.
std::vector<MultiIndex> enumerate_multi_indices_up_to(int r, int max_degree);

/// Orthogonal basis polynomial P_n^mu(x) on the unit ball:
///   prod_j (1-|x_{j-1}|^2)^{n_j/2} C_{n_j}^{(lambda_j)}(x_j / sqrt(1-|x_{j-1}|^2)),
///   lambda_j = mu + |n^{j+1}| + (r-j)/2.
/// Throws DomainError if |x| > 1 + 1e-12.
double ball_basis_eval(const MultiIndex& n, const BallParams& params, std::span<const double> x);

/// Same product, with the radial factors s_j = 1 - |x_{j-1}|^2 supplied by the
/// caller (s_0 = 1). Used where s_j is known in closed form to full precision.
double ball_basis_eval_scaled(const MultiIndex& n, const BallParams& params,
                              std::span<const double> x, std::span<const double> s);

/// Squared norm h_n^mu = <P_n^mu, P_n^mu>_mu, assembled in log space.
double ball_norm(const MultiIndex& n, const BallParams& params);

/// |L[P](x) + (|n|+r)(|n|+2mu-1) P(x)| with L the ball differential operator
///   sum_i d^2/dx_i^2 - sum_j d/dx_j x_j (2mu - 1 + sum_i x_i d/dx_i),
/// every derivative taken by nested central differences with step h.
/// Throws DomainError unless the stencil (reach 2h) stays inside the ball.
double ball_operator_residual(const MultiIndex& n, const BallParams& params,
                              std::span<const double> x, double h);

}  // namespace ballft
