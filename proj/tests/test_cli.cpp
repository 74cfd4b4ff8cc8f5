#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "dcrit/cli.hpp"
#include "dcrit/parse.hpp"
#include "dcrit/report.hpp"

using namespace dcrit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell and returns (exit code, stdout).
std::pair<int, std::string> run_binary(const std::string& args) {
  std::string cmd = std::string(DCRIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("milnor number") {
  auto r = run_cli({"crit", "--vars", "x,y", "-f", "x^3+y^3", "--milnor"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("milnor = 4\n", 0) == 0);
}

TEST_CASE("compatibility falsification") {
  std::vector<std::string> args{"check", "compat", "--vars", "x,y", "--alpha", "y*d_x", "--trials", "50", "--seed", "1"};
  auto plain = run_cli(args);
  CHECK(plain.code == 0);
  CHECK(plain.out.find("holds = false") != std::string::npos);
  CHECK(plain.out.find("X = (1)*@x, Y = (1)*@y") != std::string::npos);
  args.push_back("--expect-holds");
  CHECK(run_cli(args).code == 1);
  auto exact = run_cli({"check", "compat", "--vars", "x,y", "--alpha", "2*x*d_x + 3*y^2*d_y", "--expect-holds"});
  CHECK(exact.code == 0);
}

TEST_CASE("input errors exit with 2") {
  auto r = run_cli({"zero", "--vars", "x", "--section", "q"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position 0") != std::string::npos);
  CHECK(run_cli({"frobnicate"}).code == 2);
  auto flag = run_cli({"crit", "--vars", "x", "-f", "x^2", "--bogus"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("Usage") != std::string::npos);
  CHECK(run_cli({"lagr", "--vars", "x,y", "--alpha", "y*d_x"}).code == 2);
  CHECK(run_cli({"zero", "--vars", "x,y", "--section", "x+y^2"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("json report round trip") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"crit", "--vars", "x,y", "-f", "x^3+y^3", "--milnor", "--pairing", "--hilbert", "--obstruction", "--json"},
           {"zero", "--vars", "x,y", "--section", "x^2, x*y", "--cutoff", "6", "--json"},
           {"lagr", "--vars", "x,y", "--alpha", "3*x^2*d_x + 3*y^2*d_y", "--json"},
           {"check", "bv", "--n", "2", "--trials", "20", "--json"}}) {
    auto r = run_cli(args);
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j.contains("timing"));
    Report rep = report_from_json(j);
    CHECK(to_json(rep).dump(2) + "\n" == r.out);
    CHECK(report_from_json(to_json(rep)) == rep);
  }
}

TEST_CASE("printed polynomials re-parse") {
  auto r = run_cli({"crit", "--vars", "x,y", "-f", "1/2*x^3*y - 1/3*y^2", "--pairing", "--json", "--no-timing"});
  auto j = nlohmann::ordered_json::parse(r.out);
  auto vars = parse_vars("x,y");
  CHECK(parse_poly(j["inputs"]["f"].get<std::string>(), vars) == parse_poly("1/2*x^3*y - 1/3*y^2", vars));
  for (const auto& row : j["results"]["pairing"]["hessian"])
    for (const auto& e : row) CHECK(parse_poly(e.get<std::string>(), vars).to_string() == e.get<std::string>());
}

TEST_CASE("no-timing omits the timing field") {
  auto r = run_cli({"check", "coalgebra", "--rank", "2", "--trials", "10", "--json", "--no-timing"});
  CHECK_FALSE(nlohmann::ordered_json::parse(r.out).contains("timing"));
}

TEST_CASE("binary is deterministic") {
  const std::string args = "check gerstenhaber --n 2 --trials 40 --seed 5 --json --no-timing";
  auto a = run_binary(args);
  auto b = run_binary(args);
  CHECK(a.first == 0);
  CHECK(a.second == b.second);
  CHECK(run_binary("zero --vars x --section q").first == 2);
  CHECK(run_binary("check compat --vars x,y --alpha 'y*d_x' --expect-holds").first == 1);
}
