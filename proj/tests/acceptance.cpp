// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ballft/report.hpp"
#include "ballft/suites.hpp"
#include "cli_support.hpp"

using namespace ballft;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome from_reports(const std::vector<VerificationReport>& reports) {
  std::size_t failed = 0;
  std::string first;
  for (const auto& r : reports) {
    if (r.passed) continue;
    if (failed++ == 0) first = r.identity_name;
  }
  std::ostringstream s;
  s << reports.size() << " checks, " << failed << " failed";
  if (failed) s << " (first: " << first << ")";
  return {!reports.empty() && failed == 0, s.str()};
}

template <class... G>
Outcome groups(const G&... g) {
  const SuiteOptions opts;
  std::vector<VerificationReport> all;
  for (const auto& f : {std::function<std::vector<VerificationReport>(const SuiteOptions&)>(g)...}) {
    auto part = f(opts);
    all.insert(all.end(), part.begin(), part.end());
  }
  return from_reports(all);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Outcome cli_contract() {
  struct Case {
    std::vector<std::string> args;
    int expected;
  };
  const std::vector<Case> matrix = {
      {{"eval", "--fn", "gegenbauer", "--n", "1", "--lambda", "1.5", "--x", "0.4"}, 0},
      {{"eval", "--fn", "ball", "--r", "2", "--n", "0,1", "--mu", "1", "--x", "0.3,0.4"}, 0},
      {{"eval", "--fn", "f_r", "--r", "1", "--n", "0", "--a", "0.5", "--mu", "0.5", "--x", "0"}, 0},
      {{"fourier", "--r", "1", "--n", "0", "--a", "0.5", "--mu", "0.5", "--xi", "0", "--check"}, 0},
      {{"fourier", "--r", "2", "--n", "1,1", "--a", "1", "--mu", "0.5", "--xi=0.5,-1", "--check"}, 0},
      {{"fourier", "--r", "1", "--n", "0", "--a", "0.5", "--mu", "0.5"}, 2},
      {{"fourier", "--r", "1", "--n", "2", "--a", "1", "--mu", "1", "--xi", "0.5", "--check", "--nodes", "11",
        "--halfwidth", "3"},
       1},
      {{"verify", "--suite", "fourier-paths", "--seed", "7"}, 0},
      {{"verify", "--suite", "gegenbauer-ort", "--tolerance", "1e-300"}, 1},
      {{"verify", "--suite", "nonsense"}, 2},
      {{"table", "--fn", "theta", "--n", "2", "--a", "1", "--mu", "1", "--axis", "1", "--grid=-2:2:0.5"}, 0},
      {{"table", "--fn", "theta", "--n", "2", "--a", "1", "--mu", "1", "--axis", "1"}, 2},
      {{"eval", "--fn", "nonsense", "--x", "0"}, 2},
      {{}, 2},
  };
  int bad = 0;
  for (const auto& c : matrix) {
    const CliResult r = run_cli(c.args);
    if (r.code != c.expected) ++bad;
  }

  const auto dir = std::filesystem::temp_directory_path() / "ballft_acceptance";
  std::filesystem::create_directories(dir);
  bool identical = true;
  for (const char* fmt : {"json", "csv"}) {
    const auto p1 = dir / (std::string("a.") + fmt);
    const auto p2 = dir / (std::string("b.") + fmt);
    run_cli({"verify", "--suite", "ball-pde", "--format", fmt, "--output", p1.string()});
    run_cli({"verify", "--suite", "ball-pde", "--format", fmt, "--output", p2.string()});
    const std::string a = slurp(p1);
    identical = identical && !a.empty() && a == slurp(p2);
  }
  std::filesystem::remove_all(dir);

  const auto reports = run_suite("gegenbauer-ort", SuiteOptions{});
  const auto back = cli::reports_from_json(cli::reports_to_json(reports));
  const bool round_trip = back == reports;

  std::ostringstream s;
  s << matrix.size() << " exit-code cases, " << bad << " wrong; reruns "
    << (identical ? "identical" : "differ") << "; round trip " << (round_trip ? "ok" : "broken");
  return {bad == 0 && identical && round_trip, s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"gegenbauer orthogonality", [] { return groups(gegenbauer_orthogonality_checks); }},
      {"jacobi-gegenbauer relation", [] { return groups(jacobi_relation_checks); }},
      {"ball orthogonality", [] { return groups(ball_orthogonality_checks); }},
      {"ball pde eigenfunction", [] { return groups(ball_pde_checks); }},
      {"fourier closed form vs oracle", [] { return groups(fourier_oracle_checks); }},
      {"fourier path equivalence", [] { return groups(fourier_path_checks); }},
      {"fourier known value", [] { return groups(fourier_known_value_checks); }},
      {"continuous hahn orthogonality", [] { return groups(hahn_orthogonality_checks); }},
      {"d-family biorthogonality", [] { return groups(dfamily_orthogonality_checks); }},
      {"d-family constant specializations", [] { return groups(dfamily_constant_checks); }},
      {"cli contract", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.passed) ++failures;
    std::printf("%s %2zu %-36s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
