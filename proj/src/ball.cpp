#include "ballft/ball.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ballft/classical.hpp"
#include "ballft/errors.hpp"
#include "ballft/special.hpp"

namespace ballft {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ParameterError("multi-index must have at least one entry");
  for (int e : entries_) {
    if (e < 0) throw ParameterError("multi-index entries must be nonnegative");
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

int MultiIndex::tail_sum(int k) const {
  int s = 0;
  for (int i = k; i < dimension(); ++i) s += entries_[static_cast<std::size_t>(i)];
  return s;
}

MultiIndex MultiIndex::without_first() const {
  return MultiIndex(std::vector<int>(entries_.begin() + 1, entries_.end()));
}

MultiIndex MultiIndex::without_last() const {
  return MultiIndex(std::vector<int>(entries_.begin(), entries_.end() - 1));
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  return os.str();
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParameterError("invalid multi-index entry '" + item + "'");
    }
    if (used != item.size()) throw ParameterError("invalid multi-index entry '" + item + "'");
    out.push_back(v);
  }
  return MultiIndex(std::move(out));
}

void validate(const BallParams& params) {
  if (!(params.mu > -0.5) || params.mu == 0.0) {
    throw ParameterError("mu must satisfy mu > -1/2 and mu != 0");
  }
}

std::uint64_t ball_space_dim(int n, int r) {
  if (n < 0 || r < 1) throw ParameterError("ball_space_dim: need n >= 0, r >= 1");
  // binom(n+r-1, n), exact in integers
  std::uint64_t c = 1;
  for (int i = 1; i <= n; ++i) c = c * static_cast<std::uint64_t>(r - 1 + i) / i;
  return c;
}

std::vector<MultiIndex> enumerate_multi_indices(int r, int n) {
  if (r < 1 || n < 0) throw ParameterError("enumerate_multi_indices: need r >= 1, n >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == r - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<MultiIndex> enumerate_multi_indices_up_to(int r, int max_degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto level = enumerate_multi_indices(r, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

constexpr double kBoundaryTol = 1e-14;

double product_factor(int nj, double lambda, double xj, double s) {
  if (nj == 0) return 1.0;
  if (s <= 0.0) return 0.0;
  const double root = std::sqrt(s);
  return std::pow(root, nj) * gegenbauer(nj, lambda, xj / root);
}

}  // namespace

double ball_basis_eval_scaled(const MultiIndex& n, const BallParams& params,
                              std::span<const double> x, std::span<const double> s) {
  const int r = n.dimension();
  if (static_cast<int>(x.size()) != r || static_cast<int>(s.size()) != r) {
    throw ParameterError("ball_basis_eval: point dimension does not match multi-index");
  }
  double p = 1.0;
  for (int k = 0; k < r; ++k) {
    const double lambda = params.mu + n.tail_sum(k + 1) + 0.5 * (r - 1 - k);
    p *= product_factor(n[k], lambda, x[static_cast<std::size_t>(k)],
                        s[static_cast<std::size_t>(k)]);
  }
  return p;
}

double ball_basis_eval(const MultiIndex& n, const BallParams& params, std::span<const double> x) {
  validate(params);
  const int r = n.dimension();
  if (static_cast<int>(x.size()) != r) {
    throw ParameterError("ball_basis_eval: point dimension does not match multi-index");
  }
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (std::sqrt(norm2) > 1.0 + 1e-12) throw DomainError("ball_basis_eval: point outside the unit ball");

  std::vector<double> s(static_cast<std::size_t>(r));
  double partial = 0.0;
  for (int k = 0; k < r; ++k) {
    double sk = 1.0 - partial;
    if (sk < 0.0) {
      if (sk < -kBoundaryTol) throw DomainError("ball_basis_eval: partial norm exceeds 1");
      sk = 0.0;
    }
    if (sk <= kBoundaryTol && n[k] > 0) sk = 0.0;
    s[static_cast<std::size_t>(k)] = sk;
    partial += x[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
  }
  return ball_basis_eval_scaled(n, params, x, s);
}

double ball_norm(const MultiIndex& n, const BallParams& params) {
  validate(params);
  const int r = n.dimension();
  const double mu = params.mu;
  const int total = n.total_degree();
  Complex lg = 0.5 * r * std::log(std::numbers::pi) + log_gamma(mu + 0.5) +
               log_pochhammer(mu + 0.5 * r, total) - log_gamma(mu + 0.5 * (r + 1) + total);
  for (int k = 0; k < r; ++k) {
    const int q = r - 1 - k;  // r - j
    const int tail = n.tail_sum(k);
    const int tail_next = n.tail_sum(k + 1);
    lg += log_pochhammer(mu + 0.5 * q, tail) +
          log_pochhammer(2.0 * mu + 2.0 * tail_next + q, n[k]) - log_factorial(n[k]) -
          log_pochhammer(mu + 0.5 * (q + 1), tail);
  }
  return exp_checked(lg).real();
}

double ball_operator_residual(const MultiIndex& n, const BallParams& params,
                              std::span<const double> x, double h) {
  validate(params);
  const int r = n.dimension();
  if (static_cast<int>(x.size()) != r) {
    throw ParameterError("ball_operator_residual: point dimension does not match multi-index");
  }
  if (!(h > 0.0)) throw ParameterError("ball_operator_residual: step must be positive");
  double norm2 = 0.0;
  for (double v : x) norm2 += v * v;
  if (std::sqrt(norm2) + 2.0 * h >= 1.0) {
    throw DomainError("ball_operator_residual: stencil leaves the unit ball");
  }

  std::vector<double> y(x.begin(), x.end());
  auto P = [&](const std::vector<double>& pt) { return ball_basis_eval(n, params, pt); };
  auto shifted = [](std::vector<double> pt, int i, double d) {
    pt[static_cast<std::size_t>(i)] += d;
    return pt;
  };
  auto D = [&](const std::vector<double>& pt, int i) {
    return (P(shifted(pt, i, h)) - P(shifted(pt, i, -h))) / (2.0 * h);
  };
  // Q(y) = (2mu - 1) P(y) + sum_i y_i dP/dy_i
  auto Q = [&](const std::vector<double>& pt) {
    double q = (2.0 * params.mu - 1.0) * P(pt);
    for (int i = 0; i < r; ++i) q += pt[static_cast<std::size_t>(i)] * D(pt, i);
    return q;
  };

  const double p0 = P(y);
  double laplacian = 0.0;
  double transport = 0.0;
  for (int j = 0; j < r; ++j) {
    const auto up = shifted(y, j, h);
    const auto dn = shifted(y, j, -h);
    laplacian += (P(up) - 2.0 * p0 + P(dn)) / (h * h);
    transport += (up[static_cast<std::size_t>(j)] * Q(up) - dn[static_cast<std::size_t>(j)] * Q(dn)) /
                 (2.0 * h);
  }
  const int deg = n.total_degree();
  const double eigen = (deg + r) * (deg + 2.0 * params.mu - 1.0);
  return std::abs(laplacian - transport + eigen * p0);
}

}  // namespace ballft
