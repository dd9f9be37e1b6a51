#include "ballft/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "ballft/ball.hpp"
#include "ballft/classical.hpp"
#include "ballft/dfamily.hpp"
#include "ballft/errors.hpp"
#include "ballft/quadrature.hpp"
#include "ballft/suites.hpp"
#include "ballft/tanh_family.hpp"

namespace ballft::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Values {
  std::string fn, n, x, x_im, xi, hahn, grid, suite, output, format = "json";
  double lambda = 0, alpha = 0, beta = 0, a = 0, mu = 0, a1 = 0, a2 = 0;
  double tolerance = 0, halfwidth = 28.0;
  int r = 0, axis = 1, r_max = 3, nodes = 281;
  std::uint64_t seed = 7;
  bool check = false;
};

bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

void require(const CLI::App* sub, const std::string& name) {
  if (!given(sub, name)) throw UsageError("missing required option " + name);
}

std::vector<double> parse_reals(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    const char* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc() || ptr != end || item.empty())
      throw UsageError(field + ": cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(field + ": empty list");
  return out;
}

MultiIndex parse_index(const CLI::App* sub, const Values& v) {
  require(sub, "--n");
  MultiIndex n;
  try {
    n = MultiIndex::parse(v.n);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--n: ") + e.what());
  }
  if (given(sub, "--r") && v.r != n.dimension())
    throw UsageError("--r " + std::to_string(v.r) + " does not match --n with " +
                     std::to_string(n.dimension()) + " entries");
  return n;
}

int single_degree(const MultiIndex& n) {
  if (n.dimension() != 1) throw UsageError("--n: expected a single degree");
  return n[0];
}

std::vector<double> vector_of(const std::string& text, const std::string& field, int r) {
  auto v = parse_reals(text, field);
  if (static_cast<int>(v.size()) != r)
    throw UsageError(field + ": expected " + std::to_string(r) + " values, got " +
                     std::to_string(v.size()));
  return v;
}

struct Grid {
  std::vector<double> points;
};

Grid parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw UsageError("--grid: expected start:stop:step");
  const double start = parse_reals(text.substr(0, first), "--grid")[0];
  const double stop = parse_reals(text.substr(first + 1, second - first - 1), "--grid")[0];
  const double step = parse_reals(text.substr(second + 1), "--grid")[0];
  if (!(step > 0.0) || stop < start) throw UsageError("--grid: need step > 0 and stop >= start");
  const long count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  if (count > 100000) throw UsageError("--grid: too many points");
  Grid g;
  for (long i = 0; i < count; ++i) g.points.push_back(start + static_cast<double>(i) * step);
  return g;
}

json number_or_array(const std::vector<double>& v) {
  if (v.size() == 1) return v[0];
  return v;
}

json value_record(json inputs, Complex value) {
  return json{{"inputs", std::move(inputs)}, {"value_re", value.real()}, {"value_im", value.imag()}};
}

// Evaluates the function named by --fn at one point; shared by eval and table.
struct Evaluator {
  std::string name;
  int dimension = 1;
  json inputs;
  std::function<Complex(const std::vector<double>&)> at;
  bool restrict_to_ball = false;
  std::string variable = "x";
};

Evaluator make_evaluator(const CLI::App* sub, const Values& v) {
  require(sub, "--fn");
  Evaluator ev;
  ev.name = v.fn;
  if (v.fn == "gegenbauer") {
    require(sub, "--lambda");
    const int n = single_degree(parse_index(sub, v));
    const double lambda = v.lambda;
    ev.inputs = {{"fn", v.fn}, {"n", n}, {"lambda", lambda}};
    ev.at = [=](const std::vector<double>& x) { return Complex(gegenbauer(n, lambda, x[0])); };
  } else if (v.fn == "jacobi") {
    require(sub, "--alpha");
    require(sub, "--beta");
    const int n = single_degree(parse_index(sub, v));
    const double alpha = v.alpha, beta = v.beta;
    ev.inputs = {{"fn", v.fn}, {"n", n}, {"alpha", alpha}, {"beta", beta}};
    ev.at = [=](const std::vector<double>& x) { return Complex(jacobi(n, alpha, beta, x[0])); };
  } else if (v.fn == "hahn") {
    const int n = single_degree(parse_index(sub, v));
    HahnParameters hp{};
    if (given(sub, "--hahn")) {
      const auto p = vector_of(v.hahn, "--hahn", 4);
      hp = HahnParameters{p[0], p[1], p[2], p[3]};
    } else {
      require(sub, "--a1");
      require(sub, "--a2");
      hp = HahnParameters{v.a1, v.a2, v.a2, v.a1};
    }
    const double im = given(sub, "--x-im") ? parse_reals(v.x_im, "--x-im")[0] : 0.0;
    ev.inputs = {{"fn", v.fn},
                 {"n", n},
                 {"hahn", {hp.a.real(), hp.b.real(), hp.c.real(), hp.d.real()}},
                 {"x_im", im}};
    ev.at = [=](const std::vector<double>& x) { return continuous_hahn(n, Complex(x[0], im), hp); };
  } else if (v.fn == "ball") {
    require(sub, "--mu");
    const MultiIndex n = parse_index(sub, v);
    const BallParams bp{v.mu};
    validate(bp);
    ev.dimension = n.dimension();
    ev.restrict_to_ball = true;
    ev.inputs = {{"fn", v.fn}, {"n", n.entries()}, {"mu", v.mu}};
    ev.at = [=](const std::vector<double>& x) { return Complex(ball_basis_eval(n, bp, x)); };
  } else if (v.fn == "f_r") {
    require(sub, "--a");
    require(sub, "--mu");
    const FamilyParams p{v.a, v.mu, parse_index(sub, v)};
    validate(p);
    ev.dimension = p.dimension();
    ev.inputs = {{"fn", v.fn}, {"n", p.n.entries()}, {"a", v.a}, {"mu", v.mu}};
    ev.at = [=](const std::vector<double>& x) { return Complex(f_r_eval(x, p)); };
  } else if (v.fn == "d_family") {
    require(sub, "--a1");
    require(sub, "--a2");
    const DParams p{v.a1, v.a2, parse_index(sub, v)};
    validate(p);
    ev.dimension = p.dimension();
    std::vector<double> im(ev.dimension, 0.0);
    if (given(sub, "--x-im")) im = vector_of(v.x_im, "--x-im", ev.dimension);
    ev.inputs = {{"fn", v.fn}, {"n", p.n.entries()}, {"a1", v.a1}, {"a2", v.a2},
                 {"mu", p.mu()}, {"x_im", number_or_array(im)}};
    ev.at = [=](const std::vector<double>& x) {
      std::vector<Complex> z(x.size());
      for (std::size_t k = 0; k < x.size(); ++k) z[k] = Complex(x[k], im[k]);
      return d_family_eval(z, p);
    };
  } else if (v.fn == "theta") {
    require(sub, "--a");
    require(sub, "--mu");
    const FamilyParams p{v.a, v.mu, parse_index(sub, v)};
    validate(p);
    if (v.axis < 1 || v.axis > p.dimension()) throw UsageError("--axis: out of range");
    const int axis = v.axis - 1;
    ev.variable = "xi";
    ev.inputs = {{"fn", v.fn}, {"n", p.n.entries()}, {"a", v.a}, {"mu", v.mu}, {"axis", v.axis}};
    ev.at = [=](const std::vector<double>& xi) { return theta_factor(axis, p, xi[0]); };
  } else if (v.fn == "fourier") {
    require(sub, "--a");
    require(sub, "--mu");
    const FamilyParams p{v.a, v.mu, parse_index(sub, v)};
    validate(p);
    ev.dimension = p.dimension();
    ev.variable = "xi";
    ev.inputs = {{"fn", v.fn}, {"n", p.n.entries()}, {"a", v.a}, {"mu", v.mu}};
    ev.at = [=](const std::vector<double>& xi) { return fourier_closed_form(p, xi); };
  } else {
    throw UsageError("--fn: unknown function '" + v.fn + "'");
  }
  return ev;
}

int cmd_eval(const CLI::App* sub, const Values& v, std::ostream& out) {
  if (v.fn == "theta" || v.fn == "fourier") throw UsageError("--fn: use the fourier or table command");
  const Evaluator ev = make_evaluator(sub, v);
  require(sub, "--x");
  const auto x = vector_of(v.x, "--x", ev.dimension);
  json inputs = ev.inputs;
  inputs["x"] = number_or_array(x);
  out << value_record(inputs, ev.at(x)).dump() << '\n';
  return kSuccess;
}

int cmd_fourier(const CLI::App* sub, const Values& v, std::ostream& out) {
  require(sub, "--a");
  require(sub, "--mu");
  require(sub, "--xi");
  const FamilyParams p{v.a, v.mu, parse_index(sub, v)};
  validate(p);
  const auto xi = vector_of(v.xi, "--xi", p.dimension());
  const FourierValue closed = fourier_closed_form_detailed(p, xi);
  json rec{{"inputs", {{"n", p.n.entries()}, {"a", v.a}, {"mu", v.mu}, {"xi", number_or_array(xi)}}},
           {"closed_re", closed.value.real()},
           {"closed_im", closed.value.imag()},
           {"low_confidence", closed.low_confidence}};
  int status = kSuccess;
  if (v.check) {
    const QuadratureSpec spec{QuadratureRule::trapezoid, v.nodes, v.halfwidth};
    const GatedValue numeric = fourier_numeric(p, xi, spec);
    const double tol = given(sub, "--tolerance") ? v.tolerance : 1e-6;
    const double floor = 1e-9;
    VerificationReport rep = make_report("fourier-oracle", {}, closed.value, numeric.value,
                                         Tolerance{tol, floor}, std::nullopt, closed.low_confidence);
    const bool settled = numeric.change() <= std::max(tol * std::abs(closed.value), floor);
    rec["oracle_re"] = numeric.value.real();
    rec["oracle_im"] = numeric.value.imag();
    rec["abs_error"] = rep.abs_error;
    rec["rel_error"] = rep.rel_error;
    rec["tolerance"] = tol;
    rec["passed"] = rep.passed && settled;
    if (!(rep.passed && settled)) status = kVerificationFailed;
  }
  out << rec.dump() << '\n';
  return status;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

int cmd_verify(const CLI::App* sub, const Values& v, std::ostream& out, std::ostream& err) {
  if (!is_suite_name(v.suite)) throw UsageError("--suite: unknown suite '" + v.suite + "'");
  if (v.format != "json" && v.format != "csv") throw UsageError("--format: expected json or csv");
  if (v.r_max < 1 || v.r_max > 3) throw UsageError("--r-max: expected 1, 2 or 3");
  SuiteOptions opts;
  opts.seed = v.seed;
  opts.r_max = v.r_max;
  if (given(sub, "--tolerance")) {
    if (!(v.tolerance > 0.0)) throw UsageError("--tolerance: must be positive");
    opts.tolerance = v.tolerance;
  }
  const auto reports = run_suite(v.suite, opts);
  const std::string text = v.format == "json" ? reports_to_json(reports) : reports_to_csv(reports);
  std::size_t failed = 0;
  for (const auto& r : reports) failed += r.passed ? 0 : 1;
  if (given(sub, "--output")) {
    std::ofstream file(v.output, std::ios::binary);
    if (!file) throw UsageError("--output: cannot open '" + v.output + "'");
    file << text;
    out << v.suite << ": " << reports.size() << " checks, " << failed << " failed\n";
  } else {
    out << text;
  }
  if (failed > 0) err << v.suite << ": " << failed << " of " << reports.size() << " checks failed\n";
  return failed == 0 ? kSuccess : kVerificationFailed;
}

int cmd_table(const CLI::App* sub, const Values& v, std::ostream& out) {
  require(sub, "--grid");
  const Evaluator ev = make_evaluator(sub, v);
  const Grid g = parse_grid(v.grid);
  const int r = ev.dimension;
  std::ostringstream csv;
  if (r == 1) {
    csv << ev.variable;
  } else {
    for (int k = 0; k < r; ++k) csv << (k ? "," : "") << ev.variable << k + 1;
  }
  csv << ",value_re,value_im\n";
  std::vector<std::size_t> idx(r, 0);
  std::vector<double> pt(r);
  std::size_t total = 1;
  for (int k = 0; k < r; ++k) total *= g.points.size();
  for (std::size_t t = 0; t < total; ++t) {
    double norm2 = 0.0;
    for (int k = 0; k < r; ++k) {
      pt[k] = g.points[idx[k]];
      norm2 += pt[k] * pt[k];
    }
    if (!ev.restrict_to_ball || norm2 <= 1.0) {
      const Complex val = ev.at(pt);
      for (int k = 0; k < r; ++k) csv << format_double(pt[k]) << ',';
      csv << format_double(val.real()) << ',' << format_double(val.imag()) << '\n';
    }
    for (int k = r; k-- > 0;) {
      if (++idx[k] < g.points.size()) break;
      idx[k] = 0;
    }
  }
  if (given(sub, "--output")) {
    std::ofstream file(v.output, std::ios::binary);
    if (!file) throw UsageError("--output: cannot open '" + v.output + "'");
    file << csv.str();
  } else {
    out << csv.str();
  }
  return kSuccess;
}

void add_family_options(CLI::App* sub, Values& v) {
  sub->add_option("--fn", v.fn, "function name");
  sub->add_option("--r", v.r, "dimension, checked against --n");
  sub->add_option("--n", v.n, "degree or comma-separated multi-index");
  sub->add_option("--lambda", v.lambda, "Gegenbauer parameter");
  sub->add_option("--alpha", v.alpha, "Jacobi alpha");
  sub->add_option("--beta", v.beta, "Jacobi beta");
  sub->add_option("--a", v.a, "decay parameter a");
  sub->add_option("--mu", v.mu, "ball weight parameter mu");
  sub->add_option("--a1", v.a1, "D family / Hahn a1");
  sub->add_option("--a2", v.a2, "D family / Hahn a2");
  sub->add_option("--hahn", v.hahn, "Hahn parameters a,b,c,d");
  sub->add_option("--axis", v.axis, "Theta factor axis (1-based)");
  sub->add_option("--x-im", v.x_im, "imaginary parts of x");
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

json report_to_json(const VerificationReport& r) {
  json params = json::object();
  for (const auto& [k, vals] : r.parameters) params[k] = number_or_array(vals);
  return json{{"identity_name", r.identity_name},
              {"parameters", params},
              {"lhs_re", r.lhs.real()},
              {"lhs_im", r.lhs.imag()},
              {"rhs_re", r.rhs.real()},
              {"rhs_im", r.rhs.imag()},
              {"abs_error", r.abs_error},
              {"rel_error", r.rel_error},
              {"tolerance", r.tolerance},
              {"passed", r.passed},
              {"low_confidence", r.low_confidence}};
}

VerificationReport report_from_json(const json& j) {
  auto num = [](const json& v) {
    return v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
  };
  VerificationReport r;
  r.identity_name = j.at("identity_name").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) {
    std::vector<double> vals;
    if (v.is_array()) {
      for (const auto& e : v) vals.push_back(num(e));
    } else {
      vals.push_back(num(v));
    }
    r.parameters[k] = vals;
  }
  r.lhs = Complex(num(j.at("lhs_re")), num(j.at("lhs_im")));
  r.rhs = Complex(num(j.at("rhs_re")), num(j.at("rhs_im")));
  r.abs_error = num(j.at("abs_error"));
  r.rel_error = num(j.at("rel_error"));
  r.tolerance = num(j.at("tolerance"));
  r.passed = j.at("passed").get<bool>();
  r.low_confidence = j.at("low_confidence").get<bool>();
  return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  std::vector<VerificationReport> out;
  for (const auto& j : json::parse(text)) out.push_back(report_from_json(j));
  return out;
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream csv;
  csv << "identity_name,parameters,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rel_error,tolerance,"
         "passed,low_confidence\n";
  for (const auto& r : reports) {
    json params = json::object();
    for (const auto& [k, vals] : r.parameters) params[k] = number_or_array(vals);
    csv << csv_field(r.identity_name) << ',' << csv_field(params.dump()) << ','
        << format_double(r.lhs.real()) << ',' << format_double(r.lhs.imag()) << ','
        << format_double(r.rhs.real()) << ',' << format_double(r.rhs.imag()) << ','
        << format_double(r.abs_error) << ',' << format_double(r.rel_error) << ','
        << format_double(r.tolerance) << ',' << (r.passed ? "true" : "false") << ','
        << (r.low_confidence ? "true" : "false") << '\n';
  }
  return csv.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-ball orthogonal polynomials, their tanh-family Fourier transforms and the D family",
               "ballft"};
  app.require_subcommand(1);
  Values v;

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
  add_family_options(eval, v);
  eval->add_option("--x", v.x, "point (comma-separated)");

  CLI::App* fourier = app.add_subcommand("fourier", "closed-form Fourier transform of f_r");
  add_family_options(fourier, v);
  fourier->add_option("--xi", v.xi, "frequency (comma-separated)");
  fourier->add_flag("--check", v.check, "compare against the quadrature oracle");
  fourier->add_option("--tolerance", v.tolerance, "relative tolerance for --check");
  fourier->add_option("--nodes", v.nodes, "oracle base nodes per axis (odd)");
  fourier->add_option("--halfwidth", v.halfwidth, "oracle truncation half-width");

  CLI::App* verify = app.add_subcommand("verify", "run identity verification suites");
  verify->add_option("--suite", v.suite, "suite name or 'all'")->required();
  verify->add_option("--seed", v.seed, "seed for random sweeps");
  verify->add_option("--r-max", v.r_max, "largest dimension exercised");
  verify->add_option("--tolerance", v.tolerance, "override every relative tolerance");
  verify->add_option("--output", v.output, "report file");
  verify->add_option("--format", v.format, "json or csv");

  CLI::App* table = app.add_subcommand("table", "CSV of a function over a grid");
  add_family_options(table, v);
  table->add_option("--grid", v.grid, "start:stop:step, applied to every coordinate");
  table->add_option("--output", v.output, "CSV file");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kUsageError;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval, v, out);
    if (fourier->parsed()) return cmd_fourier(fourier, v, out);
    if (verify->parsed()) return cmd_verify(verify, v, out, err);
    if (table->parsed()) return cmd_table(table, v, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace ballft::cli
