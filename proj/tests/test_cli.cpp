#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string tmp = std::string(RANKONE_CLI_PATH) + ".out.tmp";
  const std::string cmd =
      std::string(RANKONE_CLI_PATH) + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  res.output = ss.str();
  std::remove(tmp.c_str());
  return res;
}

}  // namespace

TEST_CASE("cli: compat table emits the published 36 entries") {
  RunResult res = run_cli("compat --n 2 --table");
  REQUIRE(res.exit_code == 0);
  std::istringstream lines(res.output);
  std::string label;
  std::vector<int> values;
  int v;
  while (lines >> label) {
    for (int k = 0; k < 6; ++k) {
      lines >> v;
      values.push_back(v);
    }
  }
  const std::vector<int> expected = {
      0, 0, 1, 0, 1, 2, 0, 0, 0, 1, 1, 1, 1, 0, 0, 2, 1, 0,
      0, 1, 1, 0, 0, 1, 1, 2, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0,
  };
  CHECK(values == expected);
}

TEST_CASE("cli: compat pair and the usage error path") {
  RunResult ok = run_cli("compat --n 2 --pair -e1+e2 2e1 --json");
  REQUIRE(ok.exit_code == 0);
  auto j = nlohmann::json::parse(ok.output);
  CHECK(j.at("artifacts").at("degree_ab").get<int>() == 2);

  RunResult bad = run_cli("compat --n 2 --pair -e1+e2 -e2*");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("grammar") != std::string::npos);
}

TEST_CASE("cli: verify exits zero on success") {
  RunResult res = run_cli("verify --case nn --n 2 --trials 3 --seed 7 --json");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  for (const auto& check : j.at("checks"))
    CHECK(check.at("status").get<std::string>() == "pass");
  // identical seeds produce identical reports
  RunResult again = run_cli("verify --case nn --n 2 --trials 3 --seed 7 --json");
  CHECK(again.output == res.output);
}

TEST_CASE("cli: complex export and budget error") {
  RunResult res = run_cli("complex --kind order --n 3 --json");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j.at("artifacts").at("complex").at("facets").size() == 4);

  RunResult over = run_cli("complex --kind cluster --n 9");
  CHECK(over.exit_code == 2);
  CHECK(over.output.find("budget") != std::string::npos);
}

TEST_CASE("cli: gb presets") {
  RunResult res = run_cli("gb --preset upper --n 3 --trials 4 --seed 2 --json");
  REQUIRE(res.exit_code == 0);
  auto j = nlohmann::json::parse(res.output);
  CHECK(j.at("checks")[0].at("status").get<std::string>() == "pass");
}

TEST_CASE("cli: unknown subcommand is a usage error") {
  RunResult res = run_cli("frobnicate");
  CHECK(res.exit_code == 2);
}
