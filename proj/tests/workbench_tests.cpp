#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "report.hpp"

using cca::workbench::Report;
using cca::workbench::Verdict;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string command = std::string(CCA_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  while (size_t got = fread(buffer, 1, sizeof buffer, pipe)) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data_file(const std::string& name) {
  return std::string(CCA_DATA_DIR) + "/" + name;
}

const std::vector<std::string> kInitialMonomials = {
    "X00*X01*X02", "X00*X11",     "X00*X12",    "X01*X02*X10",
    "X02*X10*X11", "X10*X11*X12", "X01*X12",
};

}  // namespace

TEST_CASE("pipeline reproduces the built-in example") {
  RunResult run = run_cli("verify ex-main --format json");
  CHECK(run.exit_code == 0);
  Json report = Json::parse(run.output);
  CHECK(report["verdict"] == "pass");
  REQUIRE(report["payload"]["steps"].size() == 8);
  for (const auto& step : report["payload"]["steps"]) {
    CHECK(step["ok"] == true);
  }
  CHECK(report["payload"]["steps"][2]["generators"] ==
        Json(kInitialMonomials));
  CHECK(report["payload"]["steps"][4]["betti"]["1"] == 1);
}

TEST_CASE("tampered generators fail at the initial ideal") {
  RunResult run = run_cli("verify ex-main --tamper --format json");
  CHECK(run.exit_code == 1);
  Json report = Json::parse(run.output);
  CHECK(report["verdict"] == "fail");
  CHECK_FALSE(report["witnesses"].empty());
  const auto& steps = report["payload"]["steps"];
  CHECK(steps.back()["step"] == 3);
  CHECK(steps.back()["ok"] == false);
}

TEST_CASE("seeded trials are reproducible") {
  RunResult first = run_cli("verify segre --trials 5 --seed 7 --format json");
  RunResult second = run_cli("verify segre --trials 5 --seed 7 --format json");
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  Json report = Json::parse(first.output);
  CHECK(report["seed"] == 7);
  CHECK(report["payload"]["trials"].size() == 5);
}

TEST_CASE("trial bounds are validated") {
  RunResult run = run_cli("verify segre --trials 0");
  CHECK(run.exit_code == 2);
  CHECK(run.output.find("error:") != std::string::npos);
  RunResult too_big = run_cli("verify segre --max-a 4");
  CHECK(too_big.exit_code == 2);
}

TEST_CASE("quasi check reports the height pattern") {
  RunResult run = run_cli("quasi-check --format json");
  CHECK(run.exit_code == 0);
  Json report = Json::parse(run.output);
  CHECK(report["verdict"] == "pass");
  CHECK(report["payload"]["generators"].size() == 19);
  CHECK(report["payload"]["dimension"] == 4);
  CHECK(report["payload"]["heights"]["X+Y+Z"] == 4);
  CHECK(report["payload"]["height_pattern"] == true);
}

TEST_CASE("homology command over both fields") {
  std::string file = data_file("rp2.json");
  Json over_q =
      Json::parse(run_cli("homology --file " + file + " --format json").output);
  CHECK(over_q["verdict"] == "info");
  CHECK(over_q["payload"]["betti"]["1"] == 0);
  CHECK(over_q["payload"]["betti"]["2"] == 0);
  Json over_f2 = Json::parse(
      run_cli("homology --file " + file + " --field F2 --format json").output);
  CHECK(over_f2["payload"]["betti"]["1"] == 1);
  CHECK(over_f2["payload"]["betti"]["2"] == 1);
}

TEST_CASE("depth command") {
  std::string file = data_file("hollow_triangle.json");
  RunResult run = run_cli("depth --file " + file + " --format json");
  CHECK(run.exit_code == 0);
  Json report = Json::parse(run.output);
  CHECK(report["payload"]["depth"] == 2);
  CHECK(report["payload"]["krull_dimension"] == 2);
  CHECK(report["payload"]["cohen_macaulay"] == true);
}

TEST_CASE("groebner commands agree on the ideal file") {
  std::string file = data_file("ex_main.ideal");
  Json basis =
      Json::parse(run_cli("groebner --file " + file + " --format json").output);
  CHECK(basis["payload"]["members"].size() == 7);
  Json initial =
      Json::parse(run_cli("initial --file " + file + " --format json").output);
  std::vector<std::string> got;
  for (const auto& entry : initial["payload"]["generators"]) {
    got.push_back(entry.get<std::string>());
  }
  std::vector<std::string> expected = kInitialMonomials;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  Json weight =
      Json::parse(run_cli("weight --file " + file + " --format json").output);
  CHECK(weight["payload"]["certified"] == true);
  CHECK(weight["payload"]["weights"].size() == 6);
}

TEST_CASE("homogenize specializes back to the initial ideal") {
  std::string file = data_file("ex_main.ideal");
  RunResult run = run_cli("homogenize --file " + file + " --format json");
  CHECK(run.exit_code == 0);
  Json report = Json::parse(run.output);
  CHECK(report["payload"]["specialized_at_zero"].size() == 7);
}

TEST_CASE("lyubeznik command needs a monomial ideal") {
  RunResult bad =
      run_cli("lyubeznik --file " + data_file("ex_main.ideal"));
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error:") != std::string::npos);
  RunResult good = run_cli("lyubeznik --file " +
                           data_file("ex_main_initial.ideal") +
                           " --format json");
  CHECK(good.exit_code == 0);
  Json report = Json::parse(good.output);
  CHECK(report["payload"]["betti"]["1"] == 1);
  CHECK(report["payload"]["primes"].size() == 6);
}

TEST_CASE("nerve command mirrors the facet cover") {
  RunResult run = run_cli("nerve --file " + data_file("rp2.json") +
                          " --format json");
  CHECK(run.exit_code == 0);
  Json report = Json::parse(run.output);
  CHECK(report["payload"]["members"].size() == 10);
  CHECK(report["payload"]["nerve"]["vertices"].size() == 10);
}

TEST_CASE("input errors exit with code two") {
  CHECK(run_cli("homology --file /nonexistent.json").exit_code == 2);
  CHECK(run_cli("verify ex-main --bogus-flag").exit_code == 2);
  CHECK(run_cli("homology").exit_code == 2);  // --file is required
  CHECK(run_cli("").exit_code == 2);          // a subcommand is required
}

TEST_CASE("help exits cleanly") {
  RunResult run = run_cli("--help");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("verify") != std::string::npos);
}

TEST_CASE("reports round trip through json") {
  Report report;
  report.command = "homology";
  report.inputs["file"] = "x.json";
  report.verdict = Verdict::info;
  report.payload["betti"] = Json::object({{"0", 1}});
  report.seed = 99;
  Report back = Report::from_json(report.to_json());
  CHECK(back == report);
  CHECK(back.exit_code() == 0);

  report.fail_with("something broke");
  CHECK(report.verdict == Verdict::fail);
  CHECK(report.exit_code() == 1);
  Report failed = Report::from_json(report.to_json());
  CHECK(failed == report);
  CHECK(failed.witnesses.size() == 1);
}

TEST_CASE("text output carries the verdict") {
  RunResult run = run_cli("verify ex-main");
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("command: verify ex-main") != std::string::npos);
  CHECK(run.output.find("verdict: pass") != std::string::npos);
}
