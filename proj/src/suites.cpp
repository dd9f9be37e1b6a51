#include "ballft/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "ballft/ball.hpp"
#include "ballft/classical.hpp"
#include "ballft/dfamily.hpp"
#include "ballft/errors.hpp"
#include "ballft/quadrature.hpp"
#include "ballft/tanh_family.hpp"

namespace ballft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

double rel_tol(const SuiteOptions& o, double fallback) { return o.tolerance.value_or(fallback); }

std::vector<double> as_vector(const MultiIndex& n) {
  return std::vector<double>(n.entries().begin(), n.entries().end());
}

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

// Fails a report whose quadrature did not settle under node doubling.
void apply_gate(VerificationReport& rep, const GatedValue& g, double allowed) {
  if (!(g.change() <= allowed)) rep.passed = false;
}

std::vector<std::vector<double>> frequency_grid(int r) {
  switch (r) {
    case 1:
      return {{-3.0}, {-2.0}, {-1.0}, {0.0}, {0.5}, {1.5}, {3.0}};
    case 2:
      return {{0.0, 0.0}, {-3.0, 1.0}, {2.5, -2.0}, {1.0, 3.0}, {-1.5, -0.5}, {3.0, 3.0}};
    default:
      return {{0.0, 0.0, 0.0},  {-3.0, 1.5, 0.5},  {3.0, -2.0, 1.0},
              {1.0, 1.0, -3.0}, {-0.5, 2.5, -1.5}, {2.0, 0.0, 3.0}};
  }
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform(double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
}

int SplitMix64::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

std::vector<VerificationReport> gegenbauer_orthogonality_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const double tol = rel_tol(o, 1e-10);
  for (double lambda : {0.3, 1.0, 2.5}) {
    const NodeSet rule = gauss_jacobi(200, lambda - 0.5, lambda - 0.5);
    std::vector<std::vector<double>> values(7);
    for (int n = 0; n <= 6; ++n)
      for (double x : rule.nodes) values[n].push_back(gegenbauer(n, lambda, x));
    for (int n = 0; n <= 6; ++n) {
      for (int m = n; m <= 6; ++m) {
        std::vector<double> terms(rule.nodes.size());
        for (std::size_t i = 0; i < terms.size(); ++i)
          terms[i] = rule.weights[i] * values[n][i] * values[m][i];
        const double lhs = pairwise_sum(std::span<const double>(terms));
        const double hn = gegenbauer_norm(n, lambda);
        const ParameterSet ps{{"lambda", {lambda}}, {"n", {double(n)}}, {"m", {double(m)}}};
        out.push_back(make_report("gegenbauer-orthogonality", ps, lhs, n == m ? hn : 0.0,
                                  Tolerance{tol, 0.0}, hn));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> jacobi_relation_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  SplitMix64 rng(o.seed);
  for (int draw = 0; draw < 100; ++draw) {
    const int n = rng.integer(0, 10);
    double lambda = rng.uniform(0.05, 3.0);
    const double x = rng.uniform(-1.0, 1.0);
    const double lhs = gegenbauer(n, lambda, x);
    const double rhs = pochhammer(2.0 * lambda, n) / pochhammer(lambda + 0.5, n) *
                       jacobi(n, lambda - 0.5, lambda - 0.5, x);
    const ParameterSet ps{{"draw", {double(draw)}}, {"n", {double(n)}}, {"lambda", {lambda}},
                          {"x", {x}}};
    out.push_back(make_report("jacobi-gegenbauer", ps, lhs, rhs, Tolerance{rel_tol(o, 1e-12), 0.0}));
  }
  return out;
}

std::vector<VerificationReport> ball_orthogonality_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  struct Case {
    int r, max_degree;
    double tol;
  };
  std::vector<Case> cases{{2, 3, 1e-8}};
  if (o.r_max >= 3) cases.push_back({3, 2, 1e-6});
  for (const Case& c : cases) {
    if (c.r > o.r_max) continue;
    const auto indices = enumerate_multi_indices_up_to(c.r, c.max_degree);
    for (double mu : {0.5, 1.5}) {
      const BallParams bp{mu};
      for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i; j < indices.size(); ++j) {
          const double lhs = ball_inner_product_numeric(indices[i], indices[j], bp);
          const double hn = ball_norm(indices[i], bp);
          const double hm = ball_norm(indices[j], bp);
          const ParameterSet ps{{"r", {double(c.r)}}, {"mu", {mu}},
                                {"n", as_vector(indices[i])}, {"m", as_vector(indices[j])}};
          out.push_back(make_report("ball-orthogonality", ps, lhs, i == j ? hn : 0.0,
                                    Tolerance{rel_tol(o, c.tol), 0.0}, std::sqrt(hn * hm)));
        }
      }
    }
  }
  return out;
}

std::vector<VerificationReport> ball_pde_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  SplitMix64 rng(o.seed ^ 0x5DEECE66DULL);
  const double steps[3] = {1e-2, 5e-3, 2.5e-3};
  for (int r = 1; r <= std::min(o.r_max, 3); ++r) {
    for (int point = 0; point < 20; ++point) {
      std::vector<double> x(r);
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (double& v : x) {
          v = rng.uniform(-0.8, 0.8);
          norm2 += v * v;
        }
      } while (norm2 > 0.64);
      const double mu = rng.uniform(0.1, 2.0);
      for (int degree = 0; degree <= 3; ++degree) {
        for (const MultiIndex& n : enumerate_multi_indices(r, degree)) {
          ParameterSet ps{{"r", {double(r)}}, {"point", {double(point)}}, {"mu", {mu}},
                          {"n", as_vector(n)}, {"x", x}};
          double res[3];
          for (int k = 0; k < 3; ++k) res[k] = ball_operator_residual(n, BallParams{mu}, x, steps[k]);
          const auto& e = n.entries();
          if (std::all_of(e.begin(), e.end(), [](int v) { return v <= 1; })) {
            // P is multilinear here, so central differences are exact: residual is roundoff
            out.push_back(make_report("ball-pde-exact", ps, res[2], 0.0,
                                      Tolerance{rel_tol(o, 0.0), 1e-7}, 1.0));
            continue;
          }
          double sx = 0, sy = 0, sxx = 0, sxy = 0;
          for (int k = 0; k < 3; ++k) {
            const double lx = std::log(steps[k]), ly = std::log(res[k]);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
          }
          const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
          out.push_back(make_report("ball-pde-slope", ps, slope, 2.0,
                                    Tolerance{rel_tol(o, 0.2), 0.0}, 1.0));
        }
      }
    }
  }
  return out;
}

std::vector<VerificationReport> fourier_path_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  SplitMix64 rng(o.seed ^ 0xF00DULL);
  const double tol = rel_tol(o, 1e-11);
  const int rmax = std::clamp(o.r_max, 1, 3);
  for (int draw = 0; draw < 500; ++draw) {
    const int r = rng.integer(1, rmax);
    std::vector<int> entries(r);
    for (int& e : entries) e = rng.integer(0, 4);
    const double a = rng.uniform(0.25, 2.5);
    double mu = rng.uniform(-0.45, 2.5);
    if (std::fabs(mu) < 0.05) mu += 0.1;
    std::vector<double> xi(r);
    for (double& v : xi) v = rng.uniform(-3.0, 3.0);
    const FamilyParams p{a, mu, MultiIndex(entries)};
    const FourierValue closed = fourier_closed_form_detailed(p, xi);
    const std::pair<const char*, Complex> paths[] = {
        {"closed", closed.value},
        {"peel-first", fourier_via_recursion(p, xi, PeelMode::first)},
        {"peel-last", fourier_via_recursion(p, xi, PeelMode::last)},
        {"hahn", fourier_closed_form_hahn(p, xi)},
    };
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        ParameterSet ps{{"draw", {double(draw)}}, {"a", {a}}, {"mu", {mu}},
                        {"n", as_vector(p.n)}, {"xi", xi}};
        const double scale = std::max(std::abs(paths[i].second), std::abs(paths[j].second));
        out.push_back(make_report(std::string("fourier-path:") + paths[i].first + "/" + paths[j].first,
                                  std::move(ps), paths[i].second, paths[j].second,
                                  Tolerance{tol, 0.0}, scale, closed.low_confidence));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> fourier_oracle_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const double tol = rel_tol(o, 1e-6);
  const double floor = 1e-9;
  const QuadratureSpec spec{QuadratureRule::trapezoid, 281, 28.0};
  for (int r = 1; r <= std::min(o.r_max, 3); ++r) {
    const auto xis = frequency_grid(r);
    for (const MultiIndex& n : enumerate_multi_indices_up_to(r, 4)) {
      for (double a : {0.5, 1.0, 1.75}) {
        for (double mu : {0.5, 1.25}) {
          const FamilyParams p{a, mu, n};
          const auto numeric = fourier_numeric_batch(p, xis, spec);
          for (std::size_t q = 0; q < xis.size(); ++q) {
            const FourierValue closed = fourier_closed_form_detailed(p, xis[q]);
            ParameterSet ps{{"r", {double(r)}}, {"a", {a}}, {"mu", {mu}}, {"n", as_vector(n)},
                            {"xi", xis[q]}};
            auto rep = make_report("fourier-oracle", std::move(ps), closed.value, numeric[q].value,
                                   Tolerance{tol, floor}, std::nullopt, closed.low_confidence);
            apply_gate(rep, numeric[q], std::max(tol * std::abs(closed.value), floor));
            out.push_back(std::move(rep));
          }
        }
      }
    }
  }
  return out;
}

std::vector<VerificationReport> fourier_known_value_checks(const SuiteOptions& o) {
  const FamilyParams p{0.5, 0.5, MultiIndex{0}};
  const std::vector<double> xi{0.0};
  const ParameterSet ps{{"a", {0.5}}, {"mu", {0.5}}, {"n", {0.0}}, {"xi", {0.0}}};
  const Tolerance tol{rel_tol(o, 1e-12), 0.0};
  const GatedValue numeric = fourier_numeric(p, xi, QuadratureSpec{QuadratureRule::trapezoid, 641, 40.0});
  auto oracle = make_report("fourier-known-value:oracle", ps, numeric.value, kPi, tol);
  apply_gate(oracle, numeric, tol.relative * kPi);
  return {make_report("fourier-known-value:closed", ps, fourier_closed_form(p, xi), kPi, tol),
          oracle};
}

std::vector<VerificationReport> hahn_orthogonality_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const double tol = rel_tol(o, 1e-6);
  const QuadratureSpec spec{QuadratureRule::trapezoid, 401, 20.0};
  const AxisGrid grid = nested_axis_grid(spec, spec.truncation_halfwidth);
  for (auto [a1, a2] : {std::pair{0.5, 0.5}, std::pair{1.0, 0.75}}) {
    const HahnParameters hp{a1, a2, a2, a1};
    std::vector<std::vector<Complex>> p(5);
    std::vector<double> w;
    for (double x : grid.nodes) w.push_back(hahn_weight(x, a1, a2));
    for (int n = 0; n <= 4; ++n)
      for (double x : grid.nodes) p[n].push_back(continuous_hahn(n, x, hp));
    for (int n = 0; n <= 4; ++n) {
      for (int m = n; m <= 4; ++m) {
        std::vector<Complex> samples(grid.nodes.size());
        for (std::size_t i = 0; i < samples.size(); ++i) samples[i] = w[i] * p[n][i] * std::conj(p[m][i]);
        const GatedValue g = tensor_sum(std::span<const AxisGrid>(&grid, 1), samples);
        const double hn = hahn_orthogonality_constant(n, a1, a2);
        const double hm = hahn_orthogonality_constant(m, a1, a2);
        const double scale = std::sqrt(hn * hm);
        ParameterSet ps{{"a1", {a1}}, {"a2", {a2}}, {"n", {double(n)}}, {"m", {double(m)}}};
        auto rep = make_report("hahn-orthogonality", std::move(ps), g.value, n == m ? hn : 0.0,
                               Tolerance{tol, 0.0}, scale);
        apply_gate(rep, g, tol * scale);
        out.push_back(std::move(rep));
      }
    }
  }
  const ParameterSet ps{{"a1", {0.5}}, {"a2", {0.5}}, {"n", {0.0}}};
  out.push_back(make_report("hahn-orthogonality:analytic", ps, hahn_orthogonality_constant(0, 0.5, 0.5),
                            2.0 * kPi, Tolerance{rel_tol(o, 1e-12), 0.0}));
  return out;
}

std::vector<VerificationReport> parseval_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const double tol = rel_tol(o, 1e-8);
  const QuadratureSpec spec_x{QuadratureRule::trapezoid, 401, 25.0};
  const QuadratureSpec spec_xi{QuadratureRule::trapezoid, 241, 30.0};
  struct Case {
    int r, max_degree;
    double a1, a2;
  };
  std::vector<Case> cases{{1, 3, 0.5, 0.5}, {1, 3, 1.0, 0.75}};
  if (o.r_max >= 2) cases.push_back({2, 1, 1.0, 0.5});
  for (const Case& c : cases) {
    const auto indices = enumerate_multi_indices_up_to(c.r, c.max_degree);
    const BallParams bp{c.a1 + c.a2 - 0.5};
    const double twopi_r = std::pow(2.0 * kPi, c.r);
    for (const auto& n : indices) {
      for (const auto& m : indices) {
        const ParsevalSides s = parseval_check(n, m, c.a1, c.a2, spec_x, spec_xi);
        const double hn = ball_norm(n, bp), hm = ball_norm(m, bp);
        const double scale = twopi_r * std::sqrt(hn * hm);
        const ParameterSet ps{{"r", {double(c.r)}}, {"a1", {c.a1}}, {"a2", {c.a2}},
                              {"n", as_vector(n)}, {"m", as_vector(m)}};
        auto rep = make_report("parseval", ps, s.spatial.value, s.spectral.value,
                               Tolerance{tol, 0.0}, scale);
        apply_gate(rep, s.spatial, tol * scale);
        apply_gate(rep, s.spectral, tol * scale);
        out.push_back(std::move(rep));
        auto ball = make_report("parseval-ball", ps, s.spatial.value, n == m ? twopi_r * hn : 0.0,
                                Tolerance{tol, 0.0}, scale);
        apply_gate(ball, s.spatial, tol * scale);
        out.push_back(std::move(ball));
      }
    }
  }
  return out;
}

std::vector<VerificationReport> dfamily_orthogonality_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const double diag_tol = rel_tol(o, 1e-4);
  const double off_tol = o.tolerance ? *o.tolerance : 1e-5;
  const QuadratureSpec spec{QuadratureRule::trapezoid, 241, 30.0};
  for (int r = 1; r <= std::min(o.r_max, 2); ++r) {
    std::vector<AxisGrid> axes(r, nested_axis_grid(spec, spec.truncation_halfwidth));
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.nodes.size();
    const auto indices = enumerate_multi_indices_up_to(r, 3);
    for (auto [a1, a2] : {std::pair{0.5, 0.5}, std::pair{1.0, 0.75}}) {
      std::vector<std::vector<Complex>> left(indices.size()), right(indices.size());
      std::vector<Complex> pt(r);
      for (std::size_t i = 0; i < indices.size(); ++i) {
        left[i].resize(total);
        right[i].resize(total);
        const DParams p{a1, a2, indices[i]}, q{a2, a1, indices[i]};
        std::vector<std::size_t> idx(r, 0);
        for (std::size_t t = 0; t < total; ++t) {
          for (int k = 0; k < r; ++k) pt[k] = kI * axes[k].nodes[idx[k]];
          left[i][t] = d_family_eval(pt, p);
          for (auto& z : pt) z = -z;
          right[i][t] = d_family_eval(pt, q);
          for (int k = r; k-- > 0;) {
            if (++idx[k] < axes[k].nodes.size()) break;
            idx[k] = 0;
          }
        }
      }
      std::vector<Complex> samples(total);
      for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = 0; j < indices.size(); ++j) {
          for (std::size_t t = 0; t < total; ++t) samples[t] = left[i][t] * right[j][t];
          const GatedValue g = tensor_sum(axes, samples);
          const double cn = d_orthogonality_constant(indices[i], a1, a2);
          const double cm = d_orthogonality_constant(indices[j], a1, a2);
          const bool diag = i == j;
          const double scale = diag ? cn : std::sqrt(cn * cm);
          const double tol = diag ? diag_tol : off_tol;
          ParameterSet ps{{"r", {double(r)}}, {"a1", {a1}}, {"a2", {a2}},
                          {"n", as_vector(indices[i])}, {"m", as_vector(indices[j])}};
          auto rep = make_report("dfamily-orthogonality", std::move(ps), g.value, diag ? cn : 0.0,
                                 Tolerance{tol, 0.0}, scale);
          apply_gate(rep, g, tol * scale);
          out.push_back(std::move(rep));
        }
      }
      // The diagonal integrand is real and nonnegative on the grid.
      for (std::size_t i = 0; i < indices.size(); ++i) {
        double worst = 0.0;
        for (std::size_t t = 0; t < total; ++t) {
          const Complex v = left[i][t] * right[i][t];
          const double mag = std::abs(v);
          if (mag == 0.0) continue;
          worst = std::max({worst, std::fabs(v.imag()) / mag, -v.real() / mag});
        }
        const ParameterSet ps{{"r", {double(r)}}, {"a1", {a1}}, {"a2", {a2}}, {"n", as_vector(indices[i])}};
        out.push_back(make_report("dfamily-integrand-real-nonnegative", ps, worst, 0.0,
                                  Tolerance{0.0, 1e-10}, 1.0));
      }
    }
  }
  // r = 1, n = 0, a1 = a2 = 1/2: the pairing integrand is (pi sech(pi x / 2))^2, integral 4 pi.
  const ParameterSet ps0{{"r", {1.0}}, {"a1", {0.5}}, {"a2", {0.5}}, {"n", {0.0}}};
  const Tolerance t0{rel_tol(o, 1e-10), 0.0};
  const DParams d0{0.5, 0.5, MultiIndex{0}};
  const GatedValue g0 = integrate_line(
      [&](double x) {
        const Complex p[1] = {kI * x}, q[1] = {-kI * x};
        return d_family_eval(p, d0) * d_family_eval(q, d0);
      },
      QuadratureSpec{QuadratureRule::trapezoid, 601, 30.0});
  auto q0 = make_report("dfamily-orthogonality:analytic-quadrature", ps0, g0.value, 4.0 * kPi, t0);
  apply_gate(q0, g0, t0.relative * 4.0 * kPi);
  out.push_back(std::move(q0));
  out.push_back(make_report("dfamily-orthogonality:analytic-constant", ps0,
                            d_orthogonality_constant(MultiIndex{0}, 0.5, 0.5), 4.0 * kPi, t0));
  return out;
}

std::vector<VerificationReport> dfamily_structure_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  SplitMix64 rng(o.seed ^ 0xD0D0ULL);
  for (int draw = 0; draw < 200; ++draw) {
    const int r = rng.integer(1, 3);
    std::vector<int> entries(r);
    for (int& e : entries) e = rng.integer(0, 5);
    const double a1 = rng.uniform(0.3, 2.0), a2 = rng.uniform(0.3, 2.0);
    std::vector<Complex> x(r);
    std::vector<double> flat;
    for (auto& z : x) {
      z = Complex(rng.uniform(-0.5, 0.5), rng.uniform(-6.0, 6.0));
      flat.push_back(z.real());
      flat.push_back(z.imag());
    }
    const DParams p{a1, a2, MultiIndex(entries)};
    const Complex lhs = d_family_eval(x, p), rhs = d_family_eval_hahn(x, p);
    const ParameterSet ps{{"draw", {double(draw)}}, {"a1", {a1}}, {"a2", {a2}},
                          {"n", as_vector(p.n)}, {"x", flat}};
    out.push_back(make_report("dfamily-hahn-form", ps, lhs, rhs, Tolerance{rel_tol(o, 1e-11), 0.0},
                              std::max(std::abs(lhs), std::abs(rhs))));
  }
  return out;
}

std::vector<VerificationReport> dfamily_constant_checks(const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  const Tolerance tol{rel_tol(o, 1e-12), 0.0};
  const std::pair<double, double> params[] = {{0.5, 0.5}, {1.0, 0.75}, {0.3, 1.6}, {2.25, 0.4}};
  for (auto [a1, a2] : params) {
    const double s = a1 + a2;
    for (int n = 0; n <= 6; ++n) {
      const double general = d_orthogonality_constant(MultiIndex{n}, a1, a2);
      const double gamma_form = 2.0 * kPi * std::exp(log_factorial(n) + std::lgamma(2 * a1) +
                                                     std::lgamma(2 * a2) + 2 * std::lgamma(s) -
                                                     std::lgamma(2 * s + n - 1)) /
                                (n + s - 0.5);
      const double norm_form = 2.0 * kPi * std::exp(2 * log_factorial(n)) * std::tgamma(2 * a1) *
                               std::tgamma(2 * a2) / std::pow(2.0, 2 * (s - 1)) /
                               std::pow(pochhammer(2 * s - 1, n), 2) * gegenbauer_norm(n, s - 0.5);
      const ParameterSet ps{{"r", {1.0}}, {"a1", {a1}}, {"a2", {a2}}, {"n", {double(n)}}};
      out.push_back(make_report("dfamily-constant:r1-gamma-display", ps, general, gamma_form, tol));
      out.push_back(make_report("dfamily-constant:r1-norm-display", ps, general, norm_form, tol));
    }
    for (const MultiIndex& n : enumerate_multi_indices_up_to(2, 4)) {
      const int n1 = n[0], n2 = n[1];
      const double display =
          std::tgamma(2 * a1) * std::tgamma(2 * a2) * std::tgamma(2 * a1 + n2 + 0.5) *
          std::tgamma(2 * a2 + n2 + 0.5) * 4 * kPi * kPi *
          std::pow(std::exp(log_factorial(n1) + log_factorial(n2)), 2) /
          (std::pow(2.0, 2 * n2 + 4 * a1 + 4 * a2 - 3) *
           std::pow(pochhammer(2 * (n2 + s), n1), 2) * std::pow(pochhammer(2 * s - 1, n2), 2)) *
          ball_norm(n, BallParams{s - 0.5});
      const ParameterSet ps{{"r", {2.0}}, {"a1", {a1}}, {"a2", {a2}}, {"n", as_vector(n)}};
      out.push_back(make_report("dfamily-constant:r2-display", ps,
                                d_orthogonality_constant(n, a1, a2), display, tol));
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gegenbauer-ort", "ball-ort",   "ball-pde",
                                              "fourier-paths",  "fourier-oracle", "hahn-ort",
                                              "parseval",       "dfamily-ort"};
  return names;
}

bool is_suite_name(const std::string& name) {
  return name == "all" ||
         std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& options) {
  using Group = std::vector<VerificationReport> (*)(const SuiteOptions&);
  static const std::map<std::string, std::vector<Group>> groups{
      {"gegenbauer-ort", {gegenbauer_orthogonality_checks, jacobi_relation_checks}},
      {"ball-ort", {ball_orthogonality_checks}},
      {"ball-pde", {ball_pde_checks}},
      {"fourier-paths", {fourier_path_checks}},
      {"fourier-oracle", {fourier_oracle_checks, fourier_known_value_checks}},
      {"hahn-ort", {hahn_orthogonality_checks}},
      {"parseval", {parseval_checks}},
      {"dfamily-ort", {dfamily_orthogonality_checks, dfamily_structure_checks, dfamily_constant_checks}},
  };
  if (options.r_max < 1) throw ParameterError("r-max must be at least 1");
  if (!is_suite_name(name)) throw ParameterError("unknown suite: " + name);
  std::vector<VerificationReport> out;
  for (const auto& suite : suite_names()) {
    if (name != "all" && name != suite) continue;
    for (Group g : groups.at(suite)) append(out, g(options));
  }
  sort_reports(out);
  return out;
}

}  // namespace ballft
