#include "attsim/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "attsim/errors.hpp"
#include "support.hpp"

namespace attsim {
namespace {

using test::expect_vec_near;

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const SimulationError& ex) {
    return ex.what();
  }
  return {};
}

TEST(Config, EmptyObjectYieldsScenarioADefaults) {
  const SimulationSetup setup = parse_config_text("{}");
  expect_vec_near(setup.scenario.sigma0, Vec3::Zero(), 0.0);
  expect_vec_near(setup.scenario.sigma_d, Vec3(0.1, 0.2, -0.3), 0.0);
  EXPECT_DOUBLE_EQ(setup.scenario.J.J()(0, 0), 114.0);
  EXPECT_DOUBLE_EQ(setup.scenario.J.J()(1, 1), 86.0);
  EXPECT_DOUBLE_EQ(setup.scenario.J.J()(2, 2), 87.0);
  EXPECT_DOUBLE_EQ(setup.scenario.disturbance.scale, 1e-2);
  EXPECT_DOUBLE_EQ(setup.scenario.disturbance.frequency, 0.05);
  EXPECT_DOUBLE_EQ(setup.scenario.step.dt, 1e-3);
  EXPECT_DOUBLE_EQ(setup.scenario.step.duration, 20.0);
  EXPECT_DOUBLE_EQ(setup.ufsmc.alpha, 2.0);
  EXPECT_DOUBLE_EQ(setup.ufsmc.gamma1, 30.0);
  EXPECT_DOUBLE_EQ(setup.ufsmc.epsilon1, 0.5);
  EXPECT_DOUBLE_EQ(setup.ufsmc.epsilon2, 1e-4);
  EXPECT_DOUBLE_EQ(setup.smc.k, 1.5);
  EXPECT_DOUBLE_EQ(setup.smc.lambda, -0.5);
  EXPECT_DOUBLE_EQ(setup.smc.epsilon, 0.5);
}

TEST(Config, DiagonalInertiaCachesInverseEigenvalue) {
  const SimulationSetup setup =
      parse_config_text(R"({"J_diag": [114, 86, 87]})");
  EXPECT_DOUBLE_EQ(setup.scenario.J.lambda_min_inverse(), 1.0 / 114.0);
}

TEST(Config, FullInertiaAcceptedWhenSymmetricPositiveDefinite) {
  const SimulationSetup setup = parse_config_text(
      R"({"J_full": [[100, 5, -3], [5, 80, 2], [-3, 2, 90]]})");
  EXPECT_GT(setup.scenario.J.lambda_min_inverse(), 0.0);
}

TEST(Config, WeakSwitchingGainRejected) {
  const std::string msg = message_of(
      [] { parse_config_text(R"({"ufsmc": {"gamma1": 0.001}})"); });
  EXPECT_NE(msg.find("gamma1"), std::string::npos) << msg;
}

TEST(Config, UnknownKeysRejectedWithPath) {
  EXPECT_NE(message_of([] { parse_config_text(R"({"sigma9": [0,0,0]})"); })
                .find("sigma9"),
            std::string::npos);
  EXPECT_NE(
      message_of([] { parse_config_text(R"({"ufsmc": {"beta": 1}})"); })
          .find("ufsmc.beta"),
      std::string::npos);
  EXPECT_NE(
      message_of(
          [] { parse_config_text(R"({"disturbance": {"phase": 0}})"); })
          .find("disturbance.phase"),
      std::string::npos);
}

TEST(Config, InertiaFormsAreMutuallyExclusive) {
  EXPECT_THROW(parse_config_text(
                   R"({"J_diag": [1,1,1], "J_full": [[1,0,0],[0,1,0],[0,0,1]]})"),
               ValidationError);
}

TEST(Config, MalformedStructuresRejected) {
  EXPECT_THROW(parse_config_text("[1, 2, 3]"), ValidationError);
  EXPECT_THROW(parse_config_text(R"({"sigma_d": [1, 2]})"), ValidationError);
  EXPECT_THROW(parse_config_text(R"({"sigma_d": "up"})"), ValidationError);
  EXPECT_THROW(parse_config_text(R"({"J_full": [[1,0,0],[0,1,0]]})"),
               ValidationError);
  EXPECT_THROW(parse_config_text(R"({"dt": "fast"})"), ValidationError);
  EXPECT_THROW(parse_config_text("{not json"), ValidationError);
}

TEST(Config, ParameterInvariantsEnforced) {
  EXPECT_THROW(parse_config_text(R"({"dt": 0.02})"), ValidationError);
  EXPECT_THROW(parse_config_text(R"({"dt": -0.001})"), ValidationError);
  EXPECT_THROW(parse_config_text(R"({"duration": 0.0105, "dt": 0.001})"),
               ValidationError);
  EXPECT_THROW(parse_config_text(R"({"smc": {"lambda": 0.5}})"),
               ValidationError);
  EXPECT_THROW(parse_config_text(R"({"J_diag": [114, -86, 87]})"),
               ValidationError);
  EXPECT_THROW(
      parse_config_text(R"({"J_full": [[1,2,0],[0,1,0],[0,0,1]]})"),
      ValidationError);
}

TEST(Config, OverridesApplyTogether) {
  const SimulationSetup setup = parse_config_text(R"({
    "sigma_d": [0.7809, 0.4685, -0.7809],
    "disturbance": {"scale": 0.02, "freq": 0.1},
    "dt": 0.002, "duration": 10.0,
    "ufsmc": {"alpha": 3.0, "gamma1": 40.0, "eps1": 0.4, "eps2": 1e-3},
    "smc": {"k": 2.0, "lambda": -0.4, "eps": 0.3}
  })");
  expect_vec_near(setup.scenario.sigma_d, Vec3(0.7809, 0.4685, -0.7809), 0.0);
  EXPECT_DOUBLE_EQ(setup.scenario.disturbance.scale, 0.02);
  EXPECT_DOUBLE_EQ(setup.scenario.disturbance.frequency, 0.1);
  EXPECT_DOUBLE_EQ(setup.scenario.step.dt, 0.002);
  EXPECT_DOUBLE_EQ(setup.scenario.step.duration, 10.0);
  EXPECT_DOUBLE_EQ(setup.ufsmc.alpha, 3.0);
  EXPECT_DOUBLE_EQ(setup.ufsmc.gamma1, 40.0);
  EXPECT_DOUBLE_EQ(setup.ufsmc.epsilon1, 0.4);
  EXPECT_DOUBLE_EQ(setup.ufsmc.epsilon2, 1e-3);
  EXPECT_DOUBLE_EQ(setup.smc.k, 2.0);
  EXPECT_DOUBLE_EQ(setup.smc.lambda, -0.4);
  EXPECT_DOUBLE_EQ(setup.smc.epsilon, 0.3);
}

TEST(Config, FileRoundTripAndMissingFile) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "attsim_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"sigma_d": [0.2, 0.0, 0.1], "duration": 5.0})";
  }
  const SimulationSetup setup = parse_config(path.string());
  expect_vec_near(setup.scenario.sigma_d, Vec3(0.2, 0.0, 0.1), 0.0);
  EXPECT_DOUBLE_EQ(setup.scenario.step.duration, 5.0);
  std::filesystem::remove(path);

  EXPECT_THROW(parse_config("/definitely/not/here.json"), IoError);
}

TEST(Config, ErrorsNameTheOrigin) {
  const std::string msg = message_of(
      [] { parse_config_text(R"({"dt": 0.02})", "run.json"); });
  EXPECT_NE(msg.find("run.json"), std::string::npos) << msg;
}

} // namespace
} // namespace attsim
