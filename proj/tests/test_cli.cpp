#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gammaext/cli.hpp"
#include "gammaext/report_io.hpp"

using namespace gammaext;
using namespace gammaext::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("parse rejects malformed command lines") {
  CHECK_THROWS_AS(parse({}), UsageError);
  CHECK_THROWS_AS(parse({"frobnicate"}), UsageError);
  CHECK_THROWS_AS(parse({"minimize"}), UsageError);
  CHECK_THROWS_AS(parse({"minimize", "--kappa", "0"}), UsageError);
  CHECK_THROWS_AS(parse({"minimize", "--kappa", "abc"}), UsageError);
  CHECK_THROWS_AS(parse({"scan", "--kappa", "-1"}), UsageError);
  CHECK_THROWS_AS(parse({"scan", "--kappa", "1", "--range", "5:1"}), UsageError);
  CHECK_THROWS_AS(parse({"scan", "--kappa", "1", "--range", "1e-4"}), UsageError);
  CHECK_THROWS_AS(parse({"scan", "--kappa", "1", "--n", "1"}), UsageError);
  CHECK_THROWS_AS(parse({"eval", "q", "--alpha", "1"}), UsageError);
  CHECK_THROWS_AS(parse({"eval", "h", "--alpha", "-3"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "--only", "nonsense"}), UsageError);
  CHECK_THROWS_AS(parse({"verify", "--all", "--only", "case1"}), UsageError);
  CHECK_THROWS_AS(parse({"conjecture", "--family", "cauchy"}), UsageError);
}

TEST_CASE("parse builds the expected commands") {
  const Command m = parse({"minimize", "--kappa", "1.5"});
  REQUIRE(std::holds_alternative<Minimize>(m));
  CHECK(std::get<Minimize>(m).kappa == 1.5);

  const Command s = parse({"scan", "--kappa", "2", "--range", "0.01:100", "--n", "7"});
  REQUIRE(std::holds_alternative<Scan>(s));
  CHECK(std::get<Scan>(s).lo == 0.01);
  CHECK(std::get<Scan>(s).hi == 100.0);
  CHECK(std::get<Scan>(s).n == 7);

  const Command v = parse({"verify", "--only", "chain_plus,case1_transcendental"});
  REQUIRE(std::holds_alternative<Verify>(v));
  CHECK(std::get<Verify>(v).selection == std::vector<Verification>{Verification::chain_plus, Verification::case1});
  CHECK(std::get<Verify>(parse({"verify"})).selection == all_verifications());

  const Command c = parse({"conjecture"});
  REQUIRE(std::holds_alternative<Conjecture>(c));
  CHECK(std::get<Conjecture>(c).families == all_families());
}

TEST_CASE("exit codes") {
  const Result usage = invoke({"scan", "--kappa", "-1"});
  CHECK(usage.code == kExitUsage);
  CHECK(usage.err.find("usage error") != std::string::npos);
  const Result help = invoke({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("minimize") != std::string::npos);
}

TEST_CASE("minimize output") {
  const Result r = invoke({"minimize", "--kappa", "1.01"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("argmin=33.487") != std::string::npos);
  CHECK(r.out.find("min=0.54588") != std::string::npos);

  const Result boundary = invoke({"minimize", "--kappa", "1"});
  CHECK(boundary.code == kExitOk);
  CHECK(boundary.out.find("limit 1/2") != std::string::npos);
  CHECK(boundary.out.find("argmin=") == std::string::npos);
  CHECK(invoke({"minimize", "--kappa", "0.5"}).out.find("limit 0") != std::string::npos);
}

TEST_CASE("eval output") {
  const Result r = invoke({"eval", "t", "--alpha", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "t(alpha=1) = " + format_g12(1.0 - std::exp(-2.0)) + "\n");
}

TEST_CASE("scan CSV is byte-stable and has one row per point") {
  const Result a = invoke({"scan", "--kappa", "1.5", "--n", "50"});
  const Result b = invoke({"scan", "--kappa", "1.5", "--n", "50"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("alpha,value\n", 0) == 0);
  CHECK(count_lines(a.out) == 51);
  CHECK(a.out.find("\n0.0001,") != std::string::npos);
  CHECK(a.out.find("\n1000000,") != std::string::npos);

  const std::string path = "test_cli_scan.csv";
  CHECK(invoke({"scan", "--kappa", "1.5", "--n", "50", "--out", path}).code == kExitOk);
  CHECK(slurp(path) == a.out);
  std::remove(path.c_str());
}

TEST_CASE("format_g12") {
  CHECK(format_g12(0.5) == "0.5");
  CHECK(format_g12(1e-4) == "0.0001");
  CHECK(format_g12(1.0 / 3.0) == "0.333333333333");
  CHECK(format_g12(33.48708291234) == "33.4870829123");
}

TEST_CASE("verify records") {
  const Result r = invoke({"verify", "--only", "case2_J,small_alpha"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("name=case2_J") != std::string::npos);
  CHECK(r.out.find(";verdict=pass;") != std::string::npos);
  CHECK(r.out.find(";verdict=fail;") == std::string::npos);

  const std::string path = "test_cli_records.txt";
  CHECK(invoke({"verify", "--only", "case1_transcendental", "--out", path}).code == kExitOk);
  const std::string records = slurp(path);
  std::remove(path.c_str());
  CHECK(!records.empty());
  std::istringstream lines(records);
  for (std::string line; std::getline(lines, line);) CHECK(line.rfind("name=", 0) == 0);
}

TEST_CASE("counterexamples") {
  const Result r = invoke({"counterexamples"});
  CHECK(r.code == kExitOk);
  CHECK(count_lines(r.out) == 7);
  for (const auto& row : counterexample_rows()) CHECK(std::fabs(row.computed - row.printed) <= kCounterexampleTol);
}

TEST_CASE("conjecture exit status follows the scan") {
  const Result gamma = invoke({"conjecture", "--family", "gamma"});
  CHECK(gamma.code == kExitOk);
  CHECK(gamma.out.find(";verdict=pass;") != std::string::npos);
  const Result poisson = invoke({"conjecture", "--family", "poisson"});
  CHECK(poisson.code == kExitCheckFailed);
  CHECK(poisson.out.find(";verdict=fail;") != std::string::npos);

  const std::string path = "test_cli_conj.csv";
  CHECK(invoke({"conjecture", "--family", "negbinomial", "--n", "4", "--range", "1:10", "--out", path}).code != kExitUsage);
  const std::string csv = slurp(path);
  std::remove(path.c_str());
  CHECK(csv.rfind("r,p,value\n", 0) == 0);
  CHECK(count_lines(csv) == 17);
}

TEST_CASE("records stay on one line") {
  const std::string line = format_record({"a;b", "pass", "x\ny;z"});
  CHECK(line.find('\n') == std::string::npos);
  CHECK(std::count(line.begin(), line.end(), ';') == 2);
  CHECK(line.rfind("name=a", 0) == 0);
}
