// End-to-end tests of the command-line front end. The binary path is baked
// in at build time (ATTSIM_CLI_PATH); each invocation runs in a shell with
// stderr folded into stdout.
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + (env.empty() ? "" : " ") + ATTSIM_CLI_PATH " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string output;
  char buffer[4096];
  while (std::size_t n = std::fread(buffer, 1, sizeof buffer, pipe)) {
    output.append(buffer, n);
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "attsim_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::size_t line_count(const fs::path& path) {
  std::ifstream in(path);
  std::size_t n = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++n;
  }
  return n;
}

TEST(Cli, UnknownScenarioExitsOneWithMessage) {
  const CliResult r = run_cli("simulate --scenario Z");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("unknown scenario"), std::string::npos) << r.output;
}

TEST(Cli, UnknownControllerExitsOne) {
  const CliResult r = run_cli("simulate --scenario A --controller pid");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("unknown controller"), std::string::npos);
}

TEST(Cli, MissingSubcommandExitsOne) {
  EXPECT_EQ(run_cli("").exit_code, 1);
  EXPECT_EQ(run_cli("plot").exit_code, 1);
}

TEST(Cli, HelpExitsZero) {
  const CliResult r = run_cli("--help");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("simulate"), std::string::npos);
}

TEST(Cli, ShortSimulateWritesTelemetryAndMetrics) {
  const fs::path dir = fresh_dir("short");
  const CliResult r = run_cli(
      "simulate --scenario A --controller both --dt 0.01 --duration 0.5 "
      "--out " +
      dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("convergence_time_s"), std::string::npos);
  EXPECT_NE(r.output.find("unwound"), std::string::npos);
  for (const char* stem : {"A_ufsmc", "A_smc"}) {
    const fs::path csv = dir / (std::string(stem) + ".csv");
    ASSERT_TRUE(fs::exists(csv)) << csv;
    EXPECT_EQ(line_count(csv), 52u); // header + 51 records
    EXPECT_TRUE(fs::exists(dir / (std::string(stem) + "_plots") /
                           "manifest.txt"));
  }
}

TEST(Cli, FullScenarioASimulateSucceeds) {
  const fs::path dir = fresh_dir("full_a");
  const CliResult r =
      run_cli("simulate --scenario A --controller ufsmc --out " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("convergence_time_s"), std::string::npos);
  EXPECT_EQ(line_count(dir / "A_ufsmc.csv"), 20002u);
}

TEST(Cli, EnvironmentVariableSelectsOutputDirectory) {
  const fs::path dir = fresh_dir("env_out");
  const CliResult r = run_cli(
      "simulate --scenario A --controller smc --dt 0.01 --duration 0.1",
      "MRP_SIM_OUT=" + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(fs::exists(dir / "A_smc.csv"));
}

TEST(Cli, ConfigFileScenarioRuns) {
  const fs::path dir = fresh_dir("config_run");
  const fs::path cfg = dir / "maneuver.json";
  {
    std::ofstream out(cfg);
    out << R"({"sigma_d": [0.2, 0.0, 0.1], "duration": 0.5, "dt": 0.01})";
  }
  const CliResult r = run_cli("simulate --scenario " + cfg.string() +
                              " --controller ufsmc --out " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_TRUE(fs::exists(dir / "maneuver_ufsmc.csv"));
}

TEST(Cli, WeakGainConfigExitsOne) {
  const fs::path dir = fresh_dir("bad_gain");
  const fs::path cfg = dir / "weak.json";
  {
    std::ofstream out(cfg);
    out << R"({"ufsmc": {"gamma1": 0.001}})";
  }
  const CliResult r =
      run_cli("simulate --scenario " + cfg.string() + " --out " + dir.string());
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("gamma1"), std::string::npos) << r.output;
}

TEST(Cli, GainOverrideIsRevalidated) {
  const CliResult r = run_cli("simulate --scenario A --gamma1 0.001");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.output.find("gamma1"), std::string::npos);
}

TEST(Cli, CompareShortRunPrintsTable) {
  const fs::path dir = fresh_dir("compare_short");
  const CliResult r = run_cli("compare --scenario A --dt 0.01 --duration 1 "
                              "--out " +
                              dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("effort_Nms"), std::string::npos);
  EXPECT_NE(r.output.find("unwound: ufsmc"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "A_ufsmc.csv"));
  EXPECT_TRUE(fs::exists(dir / "A_smc.csv"));
}

TEST(Cli, CompareScenarioBFlagsOnlyBaselineAsUnwound) {
  const fs::path dir = fresh_dir("compare_b");
  const CliResult r = run_cli("compare --scenario B --out " + dir.string());
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("unwound: ufsmc no, smc yes"), std::string::npos)
      << r.output;
}

TEST(Cli, VerifyPassesOnDefaults) {
  const CliResult r = run_cli("verify");
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_NE(r.output.find("all invariants hold"), std::string::npos);
  EXPECT_NE(r.output.find("scenario A"), std::string::npos);
  EXPECT_NE(r.output.find("scenario B"), std::string::npos);
}

} // namespace
