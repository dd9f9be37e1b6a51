#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ballft/report.hpp"
#include "ballft/suites.hpp"
#include "cli_support.hpp"

using namespace ballft;
using nlohmann::json;

namespace {

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval examples") {
  auto g = run_cli({"eval", "--fn", "gegenbauer", "--n", "1", "--lambda", "1.5", "--x", "0.4"});
  REQUIRE(g.code == 0);
  CHECK(json::parse(g.out)["value_re"].get<double>() == doctest::Approx(1.2).epsilon(1e-15));
  auto b = run_cli({"eval", "--fn", "ball", "--r", "2", "--n", "0,1", "--mu", "1", "--x", "0.3,0.4"});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["value_re"].get<double>() == doctest::Approx(0.8).epsilon(1e-15));
  auto f = run_cli({"eval", "--fn", "f_r", "--r", "1", "--n", "0", "--a", "0.5", "--mu", "0.5", "--x", "0"});
  REQUIRE(f.code == 0);
  CHECK(json::parse(f.out)["value_re"].get<double>() == 1.0);
  auto j = run_cli({"eval", "--fn", "jacobi", "--n", "1", "--alpha", "1", "--beta", "2", "--x", "0"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["value_re"].get<double>() == doctest::Approx(-0.5));
}

TEST_CASE("usage errors name the field") {
  auto r = run_cli({"eval", "--fn", "gegenbauer", "--n", "1", "--x", "0.4"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--lambda") != std::string::npos);
  auto m = run_cli({"eval", "--fn", "ball", "--r", "3", "--n", "0,1", "--mu", "1", "--x", "0.3,0.4"});
  CHECK(m.code == 2);
  CHECK(m.err.find("--r") != std::string::npos);
  auto mu = run_cli({"eval", "--fn", "ball", "--n", "0,1", "--mu", "0", "--x", "0.3,0.4"});
  CHECK(mu.code == 2);
  CHECK(mu.err.find("mu") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"fourier", "--r", "1", "--n", "0", "--a", "0.5", "--mu", "0.5"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "gegenbauer-ort", "--format", "xml"}).code == 2);
  CHECK(run_cli({"eval", "--fn", "ball", "--n", "1,1", "--mu", "0.5", "--x", "0.9,0.9"}).code == 2);
  CHECK(run_cli({"table", "--fn", "theta", "--n", "2", "--a", "1", "--mu", "1", "--axis", "1"}).code == 2);
  // a tolerance no check can meet
  CHECK(run_cli({"verify", "--suite", "gegenbauer-ort", "--tolerance", "1e-300"}).code == 1);
  CHECK(run_cli({"fourier", "--r", "1", "--n", "2", "--a", "1", "--mu", "1", "--xi", "0.5", "--check",
                 "--nodes", "11", "--halfwidth", "3"})
            .code == 1);
}

TEST_CASE("fourier with check") {
  auto r = run_cli({"fourier", "--r", "1", "--n", "0", "--a", "0.5", "--mu", "0.5", "--xi", "0", "--check"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["closed_re"].get<double>() == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(j["oracle_re"].get<double>() == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  CHECK(j["rel_error"].get<double>() < 1e-10);
  auto s = run_cli({"fourier", "--r", "2", "--n", "1,1", "--a", "1", "--mu", "0.5", "--xi=0.5,-1", "--check"});
  CHECK(s.code == 0);
  CHECK(json::parse(s.out)["passed"].get<bool>());
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "--suite", "fourier-paths", "--seed", "7"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() > 0);
  for (const auto& e : j) {
    CHECK(e.size() == 11);
    CHECK(e["passed"].get<bool>());
  }
}

TEST_CASE("byte-identical reruns") {
  const auto dir = std::filesystem::temp_directory_path() / "ballft_cli_test";
  std::filesystem::create_directories(dir);
  for (const char* fmt : {"json", "csv"}) {
    const auto p1 = dir / (std::string("a.") + fmt);
    const auto p2 = dir / (std::string("b.") + fmt);
    REQUIRE(run_cli({"verify", "--suite", "hahn-ort", "--format", fmt, "--output", p1.string()}).code == 0);
    REQUIRE(run_cli({"verify", "--suite", "hahn-ort", "--format", fmt, "--output", p2.string()}).code == 0);
    const std::string a = slurp(p1);
    CHECK(!a.empty());
    CHECK(a == slurp(p2));
    CHECK(a.find('\r') == std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("JSON round trip") {
  auto reports = run_suite("ball-pde", SuiteOptions{});
  REQUIRE(!reports.empty());
  reports.front().lhs = Complex(NAN, 0.0);
  const std::string text = cli::reports_to_json(reports);
  const auto back = cli::reports_from_json(text);
  REQUIRE(back.size() == reports.size());
  for (std::size_t i = 1; i < back.size(); ++i) CHECK(back[i] == reports[i]);
  CHECK(std::isnan(back.front().lhs.real()));
  CHECK(cli::reports_to_json(back) == text);
}

TEST_CASE("shortest float format") {
  CHECK(cli::format_double(0.1) == "0.1");
  CHECK(std::stod(cli::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(cli::format_double(-2.0) == "-2");
}

TEST_CASE("CSV reports") {
  const std::vector<VerificationReport> one{
      make_report("x", {{"n", {1.0, 2.0}}}, Complex(1.0, 0.0), Complex(1.0, 0.0), Tolerance{1e-10, 0.0})};
  const std::string csv = cli::reports_to_csv(one);
  CHECK(count_lines(csv) == 2);
  CHECK(csv.rfind("identity_name,parameters,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,rel_error,tolerance,passed,low_confidence\n", 0) == 0);
}

TEST_CASE("tables") {
  auto t = run_cli({"table", "--fn", "theta", "--r", "1", "--n", "2", "--a", "1", "--mu", "1", "--axis", "1",
                    "--grid=-2:2:0.5"});
  REQUIRE(t.code == 0);
  CHECK(count_lines(t.out) == 10);
  CHECK(t.out.rfind("xi,value_re,value_im\n", 0) == 0);
  auto b = run_cli({"table", "--fn", "ball", "--n", "1,1", "--mu", "0.5", "--grid=-1:1:0.5"});
  REQUIRE(b.code == 0);
  // 13 of the 25 grid points lie in the closed disc
  CHECK(count_lines(b.out) == 14);
}

TEST_CASE("table and eval agree") {
  auto t = run_cli({"table", "--fn", "d_family", "--n", "2", "--a1", "0.6", "--a2", "0.9", "--grid=-1:1:0.5"});
  REQUIRE(t.code == 0);
  std::istringstream lines(t.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "x,value_re,value_im");
  while (std::getline(lines, line)) {
    const std::string x = line.substr(0, line.find(','));
    auto e = run_cli({"eval", "--fn", "d_family", "--n", "2", "--a1", "0.6", "--a2", "0.9", "--x=" + x});
    REQUIRE(e.code == 0);
    const json j = json::parse(e.out);
    const std::string rest = line.substr(line.find(',') + 1);
    CHECK(rest == cli::format_double(j["value_re"].get<double>()) + "," +
                      cli::format_double(j["value_im"].get<double>()));
  }
}

}
