#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cdeig/cli.hpp"
#include "cdeig/serialize.hpp"
#include "cdeig/verify.hpp"

using namespace cdeig;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"cdeig"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum command emits the documented schema") {
  const CliRun r = run_cli({"spectrum", "-n", "4", "(i,j)"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("level") == 4);
  CHECK(j.at("is_zero_divisor") == true);
  CHECK(j.at("lambda_min").get<double>() == doctest::Approx(0.0));
  CHECK(j.at("lambda_max").get<double>() == doctest::Approx(2.0));
  REQUIRE(j.at("clusters").size() == 3);
  CHECK(j["clusters"][0]["multiplicity"] == 4);
  CHECK(j["clusters"][1]["multiplicity"] == 8);
  CHECK(j["clusters"][2]["multiplicity"] == 4);
  CHECK(!j["clusters"][0].contains("basis"));

  const CliRun with_bases = run_cli({"spectrum", "-n", "4", "--bases", "(i,j)"});
  const json jb = json::parse(with_bases.out);
  REQUIRE(jb["clusters"][0].contains("basis"));
  CHECK(jb["clusters"][0]["basis"].size() == 4);
  CHECK(jb["clusters"][0]["basis"][0].size() == 16);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"spectrum", "-n", "3", "1+2i"}).code == cli::kExitOk);
  CHECK(run_cli({"spectrum", "-n", "3", "1 + + j"}).code == cli::kExitUsage);
  CHECK(run_cli({"spectrum", "-n", "3", "0"}).code == cli::kExitZeroElement);
  CHECK(run_cli({"spectrum", "-n", "2", "t"}).code == cli::kExitUsage);
  CHECK(run_cli({"spectrum", "3"}).code == cli::kExitUsage);  // missing level
  CHECK(run_cli({"verify", "bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"search", "eig1-dims", "-n", "3"}).code == cli::kExitUsage);
  CHECK(run_cli({"solve", "-n", "4", "(i,j)", "(t,-kt)"}).code == cli::kExitNoSolution);
  CHECK(run_cli({"spectrum", "-n", "9", "1"}).code == cli::kExitUsage);  // above max level
}

TEST_CASE("solve and decompose round trip through the CLI") {
  const CliRun r = run_cli({"solve", "-n", "3", "i+j", "1+k"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("residual").get<double>() < 1e-12);
  const std::vector<double> coeffs = j.at("coeffs").get<std::vector<double>>();
  CHECK(coeffs[1] == doctest::Approx(-1.0));

  const CliRun d = run_cli({"decompose", "-n", "4", "(i,j)", "1+e9"});
  REQUIRE(d.code == cli::kExitOk);
  const json dj = json::parse(d.out);
  REQUIRE(dj.at("components").size() == 1);
  CHECK(dj["components"][0]["value"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("subalgebra command") {
  const CliRun r = run_cli({"subalgebra", "-n", "3", "j", "t"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j.at("dim") == 4);
  CHECK(j.at("basis").size() == 4);
}

TEST_CASE("verify output is byte-identical for a fixed seed") {
  const std::vector<std::string> args{"verify", "spec-top", "--seed", "11", "--trials", "6"};
  const CliRun r1 = run_cli(args);
  const CliRun r2 = run_cli(args);
  CHECK(r1.code == cli::kExitOk);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("RESULT PASS") != std::string::npos);

  const CliRun j1 = run_cli({"verify", "spec-top", "--seed", "11", "--trials", "6", "--json"});
  const CliRun j2 = run_cli({"verify", "spec-top", "--seed", "11", "--trials", "6", "--json"});
  CHECK(j1.out == j2.out);
  const json report = json::parse(j1.out);
  CHECK(report.at("pass") == true);
  CHECK(report.at("seed") == 11);
  for (const auto& c : report.at("checks")) CHECK(c.at("pass") == true);
}

TEST_CASE("search output is byte-identical for a fixed seed") {
  const std::vector<std::string> args{"search", "zd-spectra", "-n", "4", "--samples", "40",
                                      "--seed", "9"};
  const CliRun r1 = run_cli(args);
  const CliRun r2 = run_cli(args);
  REQUIRE(r1.code == cli::kExitOk);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == "spectrum,count\n0:4;1:8;2:4,40\n");

  const CliRun e = run_cli({"search", "eig1-dims", "-n", "4", "--samples", "50", "--seed", "9"});
  REQUIRE(e.code == cli::kExitOk);
  CHECK(e.out.rfind("dim_eig1,count\n", 0) == 0);
  CHECK(e.out.find("\n8,") != std::string::npos);
  CHECK(e.out.find("\n16,") != std::string::npos);
  CHECK(e.out.find("\n4,") == std::string::npos);
  CHECK(e.out.find("\n12,") == std::string::npos);
}

TEST_CASE("report determinism at the library level") {
  const VerificationReport r1 = run_suite("a4", 21, 10);
  const VerificationReport r2 = run_suite("a4", 21, 10);
  REQUIRE(r1.checks.size() == r2.checks.size());
  for (size_t k = 0; k < r1.checks.size(); ++k) {
    CHECK(r1.checks[k].id == r2.checks[k].id);
    CHECK(r1.checks[k].max_residual == r2.checks[k].max_residual);
    CHECK(r1.checks[k].pass == r2.checks[k].pass);
  }
}
