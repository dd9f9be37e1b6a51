#include "ballft/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "ballft/classical.hpp"
#include "ballft/errors.hpp"

namespace ballft {

namespace {

// P_n^{(alpha,beta)}(x) and P_{n-1}^{(alpha,beta)}(x) by the three-term recurrence.
std::pair<double, double> jacobi_pair(int n, double alpha, double beta, double x) {
  double prev = 1.0;
  if (n == 0) return {prev, 0.0};
  double cur = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
  const double ab = alpha + beta;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    const double next = ((c + 1.0) * ((c + 2.0) * c * x + alpha * alpha - beta * beta) * cur -
                         2.0 * (k + alpha) * (k + beta) * (c + 2.0) * prev) /
                        (2.0 * (k + 1) * (k + ab + 1.0) * c);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

double jacobi_derivative(int n, double alpha, double beta, double x, double pn, double pn1) {
  const double c = 2.0 * n + alpha + beta;
  return (n * ((alpha - beta) - c * x) * pn + 2.0 * (n + alpha) * (n + beta) * pn1) /
         (c * (1.0 - x * x));
}

// C_n^{(lambda)}(x) by the three-term recurrence; an evaluation route separate
// from the library's hypergeometric form.
double gegenbauer_recurrence(int n, double lambda, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = 2.0 * lambda * x;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * (k + lambda) * x * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

// Dot product with a fixed four-way accumulation shape.
double dot(const double* a, const double* b, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    for (int l = 0; l < 4; ++l) acc[l] += a[i + l] * b[i + l];
  for (; i < n; ++i) acc[i % 4] += a[i] * b[i];
  return (acc[0] + acc[1]) + (acc[2] + acc[3]);
}

void check_finite(Complex v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw NonFiniteIntegrandError("quadrature: integrand is not finite at a node");
}

template <class T>
T pairwise_impl(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_impl(v.first(half)) + pairwise_impl(v.subspan(half));
}

double axis_halfwidth(double T, double rate) { return T / std::max(1.0, rate); }

std::vector<AxisGrid> family_axes(const FamilyParams& params, const QuadratureSpec& spec,
                                  bool doubled) {
  const int r = params.dimension();
  std::vector<AxisGrid> axes;
  for (int k = 0; k < r; ++k) {
    const double T = axis_halfwidth(spec.truncation_halfwidth, 2.0 * params.a + 0.5 * (r - 1 - k));
    if (spec.rule == QuadratureRule::trapezoid) {
      axes.push_back(nested_axis_grid(spec, T));
    } else {
      NodeSet ns = line_rule(spec, T, doubled);
      axes.push_back(AxisGrid{ns.nodes, ns.weights, ns.weights});
    }
  }
  return axes;
}

// Tabulates f_r on the tensor grid and contracts it against e^{-i xi.x} for every
// xi and both weight sets. P_n^mu is evaluated from its definition at upsilon(x);
// factors that depend on leading coordinates only are hoisted out of inner loops.
std::vector<std::array<Complex, 2>> tensor_transform(const FamilyParams& p,
                                                     const std::vector<AxisGrid>& axes,
                                                     std::span<const std::vector<double>> xis) {
  const int r = p.dimension();
  const std::size_t nxi = xis.size();
  for (const auto& xi : xis)
    if (static_cast<int>(xi.size()) != r) throw ParameterError("fourier: dimension mismatch");

  struct AxisTables {
    std::vector<double> th, sech, wpow;
    std::vector<std::vector<Complex>> phase;  // [xi][i]
    std::vector<std::vector<double>> cosine, sine;  // [xi][i], e^{-i xi x} = cos - i sin
    double lambda = 0.0;
    int n = 0;
  };
  std::vector<AxisTables> tab(r);
  for (int k = 0; k < r; ++k) {
    const auto& x = axes[k].nodes;
    AxisTables& t = tab[k];
    t.n = p.n[k];
    t.lambda = p.mu + p.n.tail_sum(k + 1) + 0.5 * (r - 1 - k);
    const double rate = 2.0 * p.a + 0.5 * (r - 1 - k);
    for (double xv : x) {
      const double ls = log_sech(xv);
      t.th.push_back(std::tanh(xv));
      t.sech.push_back(std::exp(ls));
      t.wpow.push_back(std::exp(rate * ls));
    }
    t.phase.resize(nxi);
    t.cosine.resize(nxi);
    t.sine.resize(nxi);
    for (std::size_t q = 0; q < nxi; ++q) {
      for (double xv : x) {
        t.phase[q].push_back(std::polar(1.0, -xis[q][k] * xv));
        t.cosine[q].push_back(std::cos(xis[q][k] * xv));
        t.sine[q].push_back(std::sin(xis[q][k] * xv));
      }
    }
  }

  auto factor = [](const AxisTables& t, std::size_t i, double sech_prefix, double norm2,
                   double* upsilon) {
    const double u = t.th[i] * sech_prefix;
    *upsilon = u;
    if (t.n == 0) return 1.0;
    const double s = 1.0 - norm2;
    if (s <= 0.0) return 0.0;
    const double root = std::sqrt(s);
    const double arg = std::clamp(u / root, -1.0, 1.0);
    double radial = 1.0;
    for (int j = 0; j < t.n; ++j) radial *= root;
    return radial * gegenbauer_recurrence(t.n, t.lambda, arg);
  };

  const int outer_axes = r - 1;
  std::size_t outer_count = 1;
  for (int k = 0; k < outer_axes; ++k) outer_count *= axes[k].nodes.size();

  // rows[(set * nxi + q) * outer_count + t]
  std::vector<Complex> rows(2 * nxi * outer_count);
  std::vector<std::size_t> idx(static_cast<std::size_t>(std::max(outer_axes, 0)), 0);
  // prefix state before axis k: product of P factors, weights, sech prefix, |upsilon|^2
  std::vector<double> pf(r + 1, 1.0), pw(r + 1, 1.0), ps(r + 1, 1.0), pn(r + 1, 0.0);

  const AxisTables& last = tab[r - 1];
  const AxisGrid& last_grid = axes[r - 1];
  const std::size_t nlast = last_grid.nodes.size();
  std::vector<double> fvals(nlast), weighted(nlast);

  int changed = 0;
  for (std::size_t t = 0; t < outer_count; ++t) {
    for (int k = changed; k < outer_axes; ++k) {
      double u = 0.0;
      const double fk = factor(tab[k], idx[k], ps[k], pn[k], &u);
      pf[k + 1] = pf[k] * fk;
      pw[k + 1] = pw[k] * tab[k].wpow[idx[k]];
      ps[k + 1] = ps[k] * tab[k].sech[idx[k]];
      pn[k + 1] = pn[k] + u * u;
    }
    const double outer_f = pf[outer_axes] * pw[outer_axes];
    for (std::size_t i = 0; i < nlast; ++i) {
      double u = 0.0;
      const double fk = factor(last, i, ps[outer_axes], pn[outer_axes], &u);
      fvals[i] = outer_f * fk * last.wpow[i];
      check_finite(fvals[i]);
    }
    for (int set = 0; set < 2; ++set) {
      const auto& wl = set == 0 ? last_grid.weights : last_grid.base_weights;
      double wouter = 1.0;
      for (int k = 0; k < outer_axes; ++k)
        wouter *= set == 0 ? axes[k].weights[idx[k]] : axes[k].base_weights[idx[k]];
      for (std::size_t i = 0; i < nlast; ++i) weighted[i] = fvals[i] * wl[i];
      for (std::size_t q = 0; q < nxi; ++q) {
        Complex& dest = rows[(set * nxi + q) * outer_count + t];
        if (wouter == 0.0) {
          dest = 0.0;
          continue;
        }
        Complex ph = wouter;
        for (int k = 0; k < outer_axes; ++k) ph *= tab[k].phase[q][idx[k]];
        const Complex inner(dot(weighted.data(), last.cosine[q].data(), nlast),
                            -dot(weighted.data(), last.sine[q].data(), nlast));
        dest = ph * inner;
      }
    }
    // mixed-radix increment, last outer axis fastest
    changed = outer_axes;
    for (int k = outer_axes - 1; k >= 0; --k) {
      if (++idx[k] < axes[k].nodes.size()) {
        changed = k;
        break;
      }
      idx[k] = 0;
      changed = k;
    }
  }

  std::vector<std::array<Complex, 2>> out(nxi);
  for (std::size_t q = 0; q < nxi; ++q)
    for (int set = 0; set < 2; ++set)
      out[q][set] = pairwise_sum(
          std::span<const Complex>(rows).subspan((set * nxi + q) * outer_count, outer_count));
  return out;
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (spec.nodes_per_axis < 2) throw ParameterError("quadrature: nodes_per_axis must be >= 2");
  if (!(spec.truncation_halfwidth > 0.0) || !std::isfinite(spec.truncation_halfwidth))
    throw ParameterError("quadrature: truncation_halfwidth must be positive");
  if (spec.rule == QuadratureRule::gauss_legendre && spec.panels < 1)
    throw ParameterError("quadrature: panels must be positive");
  if (spec.rule == QuadratureRule::trapezoid && spec.nodes_per_axis % 2 == 0)
    throw ParameterError("quadrature: trapezoid rule needs an odd node count");
}

NodeSet gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw ParameterError("gauss_jacobi: n must be positive");
  if (!(alpha > -1.0) || !(beta > -1.0)) throw ParameterError("gauss_jacobi: alpha, beta > -1");
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    diag[k] = k == 0 ? (beta - alpha) / (ab + 2.0)
                     : (beta * beta - alpha * alpha) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    sub[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                           (c * c * (c + 1.0) * (c - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
  NodeSet out;
  const double log_const = std::lgamma(n + alpha + 1.0) + std::lgamma(n + beta + 1.0) -
                           std::lgamma(n + ab + 1.0) - std::lgamma(n + 1.0) +
                           (ab + 1.0) * std::numbers::ln2;
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 3; ++it) {
      const auto [pn, pn1] = jacobi_pair(n, alpha, beta, x);
      const double d = jacobi_derivative(n, alpha, beta, x, pn, pn1);
      const double step = pn / d;
      if (!std::isfinite(step)) break;
      x -= step;
    }
    const auto [pn, pn1] = jacobi_pair(n, alpha, beta, x);
    const double d = jacobi_derivative(n, alpha, beta, x, pn, pn1);
    out.nodes.push_back(x);
    out.weights.push_back(std::exp(log_const - std::log1p(-x * x) - 2.0 * std::log(std::fabs(d))));
  }
  return out;
}

NodeSet gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

NodeSet line_rule(const QuadratureSpec& spec, double halfwidth, bool doubled) {
  validate(spec);
  NodeSet out;
  if (spec.rule == QuadratureRule::trapezoid) {
    AxisGrid g = nested_axis_grid(spec, halfwidth);
    if (doubled) return NodeSet{g.nodes, g.weights};
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (g.base_weights[i] != 0.0) {
        out.nodes.push_back(g.nodes[i]);
        out.weights.push_back(g.base_weights[i]);
      }
    return out;
  }
  const NodeSet ref = gauss_legendre(doubled ? 2 * spec.nodes_per_axis : spec.nodes_per_axis);
  const double width = 2.0 * halfwidth / spec.panels;
  for (int p = 0; p < spec.panels; ++p) {
    const double mid = -halfwidth + (p + 0.5) * width;
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      out.nodes.push_back(mid + 0.5 * width * ref.nodes[i]);
      out.weights.push_back(0.5 * width * ref.weights[i]);
    }
  }
  return out;
}

AxisGrid nested_axis_grid(const QuadratureSpec& spec, double halfwidth) {
  validate(spec);
  const double h = 2.0 * spec.truncation_halfwidth / (spec.nodes_per_axis - 1);
  const long half = static_cast<long>(std::ceil(halfwidth / h - 1e-9));
  AxisGrid g;
  for (long i = -2 * half; i <= 2 * half; ++i) {
    g.nodes.push_back(0.5 * h * static_cast<double>(i));
    g.weights.push_back(0.5 * h);
    g.base_weights.push_back(i % 2 == 0 ? h : 0.0);
  }
  return g;
}

Complex pairwise_sum(std::span<const Complex> values) { return pairwise_impl(values); }
double pairwise_sum(std::span<const double> values) { return pairwise_impl(values); }

GatedValue tensor_sum(std::span<const AxisGrid> axes, std::span<const Complex> samples) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.nodes.size();
  if (samples.size() != total) throw ParameterError("tensor_sum: sample count mismatch");
  std::vector<Complex> fine(total), base(total);
  std::vector<std::size_t> idx(axes.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    check_finite(samples[t]);
    double wf = 1.0, wb = 1.0;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      wf *= axes[k].weights[idx[k]];
      wb *= axes[k].base_weights[idx[k]];
    }
    fine[t] = wf * samples[t];
    base[t] = wb * samples[t];
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].nodes.size()) break;
      idx[k] = 0;
    }
  }
  return GatedValue{pairwise_sum(std::span<const Complex>(fine)),
                    pairwise_sum(std::span<const Complex>(base))};
}

GatedValue integrate_line(const std::function<Complex(double)>& f, const QuadratureSpec& spec) {
  validate(spec);
  const double T = spec.truncation_halfwidth;
  auto run = [&](const NodeSet& ns) {
    std::vector<Complex> terms(ns.nodes.size());
    for (std::size_t i = 0; i < ns.nodes.size(); ++i) {
      const Complex v = f(ns.nodes[i]);
      check_finite(v);
      terms[i] = ns.weights[i] * v;
    }
    return pairwise_sum(std::span<const Complex>(terms));
  };
  if (spec.rule == QuadratureRule::trapezoid) {
    const AxisGrid g = nested_axis_grid(spec, T);
    std::vector<Complex> samples(g.nodes.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) samples[i] = f(g.nodes[i]);
    return tensor_sum(std::span<const AxisGrid>(&g, 1), samples);
  }
  return GatedValue{run(line_rule(spec, T, true)), run(line_rule(spec, T, false))};
}

std::vector<GatedValue> fourier_numeric_batch(const FamilyParams& params,
                                              std::span<const std::vector<double>> xis,
                                              const QuadratureSpec& spec) {
  validate(params);
  validate(spec);
  std::vector<GatedValue> out(xis.size());
  if (spec.rule == QuadratureRule::trapezoid) {
    const auto res = tensor_transform(params, family_axes(params, spec, true), xis);
    for (std::size_t q = 0; q < xis.size(); ++q) out[q] = GatedValue{res[q][0], res[q][1]};
    return out;
  }
  const auto fine = tensor_transform(params, family_axes(params, spec, true), xis);
  const auto base = tensor_transform(params, family_axes(params, spec, false), xis);
  for (std::size_t q = 0; q < xis.size(); ++q) out[q] = GatedValue{fine[q][0], base[q][0]};
  return out;
}

GatedValue fourier_numeric(const FamilyParams& params, std::span<const double> xi,
                           const QuadratureSpec& spec) {
  const std::vector<std::vector<double>> xis{std::vector<double>(xi.begin(), xi.end())};
  return fourier_numeric_batch(params, xis, spec)[0];
}

double ball_inner_product_numeric(const MultiIndex& n, const MultiIndex& m, const BallParams& params,
                                  int nodes_per_axis) {
  validate(params);
  const int r = n.dimension();
  if (m.dimension() != r) throw ParameterError("ball inner product: dimension mismatch");
  std::vector<NodeSet> rules;
  for (int k = 0; k < r; ++k) {
    const double e = params.mu - 0.5 + 0.5 * (r - 1 - k);
    rules.push_back(gauss_jacobi(nodes_per_axis, e, e));
  }
  std::size_t total = 1;
  for (int k = 0; k < r; ++k) total *= rules[k].nodes.size();
  std::vector<double> terms(total);
  std::vector<std::size_t> idx(r, 0);
  std::vector<double> x(r);
  for (std::size_t t = 0; t < total; ++t) {
    double norm2 = 0.0, w = 1.0;
    for (int k = 0; k < r; ++k) {
      const double s = std::max(1.0 - norm2, 0.0);
      x[k] = rules[k].nodes[idx[k]] * std::sqrt(s);
      norm2 += x[k] * x[k];
      w *= rules[k].weights[idx[k]];
    }
    terms[t] = w * ball_basis_eval(n, params, x) * ball_basis_eval(m, params, x);
    for (int k = r; k-- > 0;) {
      if (++idx[k] < rules[k].nodes.size()) break;
      idx[k] = 0;
    }
  }
  return pairwise_sum(std::span<const double>(terms));
}

ParsevalSides parseval_check(const MultiIndex& n, const MultiIndex& m, double a1, double a2,
                             const QuadratureSpec& spec_x, const QuadratureSpec& spec_xi) {
  const int r = n.dimension();
  if (m.dimension() != r) throw ParameterError("parseval: dimension mismatch");
  if (spec_x.rule != QuadratureRule::trapezoid || spec_xi.rule != QuadratureRule::trapezoid)
    throw ParameterError("parseval: nested trapezoid grids required");
  const double mu = a1 + a2 - 0.5;
  const FamilyParams pf{a1, mu, n}, pg{a2, mu, m};
  validate(pf);
  validate(pg);

  auto run = [r](const std::vector<AxisGrid>& axes, auto&& sample) {
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.nodes.size();
    std::vector<Complex> samples(total);
    std::vector<std::size_t> idx(r, 0);
    std::vector<double> pt(r);
    for (std::size_t t = 0; t < total; ++t) {
      for (int k = 0; k < r; ++k) pt[k] = axes[k].nodes[idx[k]];
      samples[t] = sample(pt);
      for (int k = r; k-- > 0;) {
        if (++idx[k] < axes[k].nodes.size()) break;
        idx[k] = 0;
      }
    }
    return tensor_sum(axes, samples);
  };

  std::vector<AxisGrid> xaxes, xiaxes;
  for (int k = 0; k < r; ++k) {
    const double rate = 2.0 * (a1 + a2) + (r - 1 - k);
    xaxes.push_back(nested_axis_grid(spec_x, axis_halfwidth(spec_x.truncation_halfwidth, rate)));
    xiaxes.push_back(nested_axis_grid(spec_xi, spec_xi.truncation_halfwidth));
  }
  ParsevalSides out;
  const double scale = std::pow(2.0 * std::numbers::pi, r);
  const GatedValue sx = run(xaxes, [&](std::span<const double> x) {
    return Complex(f_r_eval(x, pf) * f_r_eval(x, pg));
  });
  out.spatial = GatedValue{scale * sx.value, scale * sx.base};
  out.spectral = run(xiaxes, [&](std::span<const double> xi) {
    return fourier_closed_form(pf, xi) * std::conj(fourier_closed_form(pg, xi));
  });
  return out;
}

}  // namespace ballft
