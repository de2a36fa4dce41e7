#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "doctest.h"

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(POWERGRAPH_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, read);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

CliResult run_cli_env(const std::string& env, const std::string& args) {
  const std::string command =
      env + " " + std::string(POWERGRAPH_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t read = 0;
  while ((read = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, read);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli: analyze single orders") {
  const CliResult r210 = run_cli("analyze 210 --format json");
  CHECK(r210.exit_code == 0);
  const auto j210 = nlohmann::json::parse(r210.output);
  CHECK(j210["kappa"] == 70);
  CHECK(j210["regime"] == "r_ge_4");
  CHECK(j210["achieving"][0]["kind"] == "Z");
  CHECK(j210["achieving"][0]["params"]["a"] == 4);

  const CliResult r9 = run_cli("analyze 9");
  CHECK(r9.exit_code == 0);
  CHECK(r9.output.find("complete graph, no cut-set") != std::string::npos);

  const CliResult r2310 = run_cli("analyze 2310 --json");
  CHECK(r2310.exit_code == 0);
  const auto j2310 = nlohmann::json::parse(r2310.output);
  CHECK(j2310["kappa"] == 630);
  CHECK(j2310["achieving"][0]["kind"] == "X");

  const CliResult table = run_cli("analyze 210");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("kappa: 70") != std::string::npos);
  CHECK(table.output.find("Z_4^1") != std::string::npos);

  const CliResult csv = run_cli("analyze 12 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output ==
        "n,r,regime,kappa,achieving_kind,achieving_params,match\n"
        "12,2,r2_p1_even,6,Z,a=2;s=1,true\n");

  const CliResult oracle = run_cli("analyze 12 --oracle both --format json");
  CHECK(oracle.exit_code == 0);
  const auto joracle = nlohmann::json::parse(oracle.output);
  CHECK(joracle["verification"]["oracle_used"] == "both");
  CHECK(joracle["verification"]["oracle_kappa"] == 6);
  CHECK(joracle["verification"]["match"] == true);
}

TEST_CASE("cli: bad orders exit with code 2") {
  CHECK(run_cli("analyze abc").exit_code == 2);
  CHECK(run_cli("analyze 1").exit_code == 2);
  CHECK(run_cli("analyze 0").exit_code == 2);
  CHECK(run_cli("analyze 9223372036854775808").exit_code == 2);  // 2^63
  CHECK(run_cli("verify-range 5 2").exit_code == 2);
}

TEST_CASE("cli: class-cap overruns exit with code 3") {
  CHECK(run_cli("analyze 360 --class-cap 8").exit_code == 3);
  CHECK(run_cli_env("POWERGRAPH_CLASS_CAP=8", "analyze 360").exit_code == 3);
  // the flag outranks the environment
  CHECK(run_cli_env("POWERGRAPH_CLASS_CAP=8", "analyze 360 --class-cap 4096").exit_code == 0);
}

TEST_CASE("cli: verify-range") {
  const CliResult csv = run_cli("verify-range 2 40 --oracle both --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("n,r,regime,kappa,achieving_kind,achieving_params,match\n") !=
        std::string::npos);
  CHECK(csv.output.find("12,2,r2_p1_even,6,Z,a=2;s=1,true\n") != std::string::npos);
  CHECK(csv.output.find("checked 39 orders") != std::string::npos);
  CHECK(csv.output.find("0 failures") != std::string::npos);

  const CliResult vacuous = run_cli("verify-range 2 2 --oracle none --format json");
  CHECK(vacuous.exit_code == 0);
  const auto records = nlohmann::json::parse(
      vacuous.output.substr(0, vacuous.output.find("\nchecked") + 1));
  REQUIRE(records.size() == 1);
  CHECK(records[0]["n"] == 2);
  CHECK(records[0]["regime"] == "prime_power");
  CHECK(records[0]["verification"]["oracle_used"] == "none");
  CHECK(records[0]["verification"]["match"] == true);

  CHECK(run_cli("verify-range 2 30 --output /nonexistent-dir/records.json").exit_code == 4);
}

TEST_CASE("cli: selftest") {
  const CliResult r = run_cli("selftest --max-n 300");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("z_size_monotone_direction") != std::string::npos);
  CHECK(r.output.find("all hold") != std::string::npos);
  CHECK(r.output.find("violations found") == std::string::npos);
}
