/// attsim — rigid-spacecraft attitude-maneuver simulator.
///
/// Subcommands:
///   simulate  run one scenario under one (or both) controllers, write CSV
///             telemetry + plot data, print a metrics summary
///   compare   run both controllers on one scenario, print the comparison
///             table and unwinding flags
///   verify    run the invariant monitors on both built-in scenarios; exit 3
///             on any violation
///
/// Exit codes: 0 success, 1 validation/IO/usage error, 2 numerical failure
/// (non-finite state or control), 3 invariant violation in `verify`.
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "attsim/config.hpp"
#include "attsim/simharness.hpp"
#include "attsim/telemetry.hpp"

namespace {

using namespace attsim;

struct Overrides {
  std::optional<double> dt, duration;
  std::optional<double> alpha, gamma1, eps1, eps2;
  std::optional<double> k, lambda, eps;
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--dt", ov.dt, "integrator step, s");
  cmd->add_option("--duration", ov.duration, "simulated time span, s");
  cmd->add_option("--alpha", ov.alpha, "sliding-surface shaping gain");
  cmd->add_option("--gamma1", ov.gamma1, "static switching gain, N*m");
  cmd->add_option("--eps1", ov.eps1, "switching smoothing band on s");
  cmd->add_option("--eps2", ov.eps2, "singularity guard (clamp at 1/eps2)");
  cmd->add_option("--k", ov.k, "baseline reaching gain, 1/s");
  cmd->add_option("--lambda", ov.lambda, "baseline surface parameter (< 0)");
  cmd->add_option("--eps", ov.eps, "baseline saturation band on s");
}

SimulationSetup resolve_setup(const std::string& scenario, const Overrides& ov) {
  SimulationSetup setup;
  if (scenario == "A" || scenario == "B") {
    setup = builtin_setup(scenario);
  } else if (std::filesystem::exists(scenario)) {
    setup = parse_config(scenario);
    setup.scenario.name = std::filesystem::path(scenario).stem().string();
  } else {
    throw ValidationError("unknown scenario '" + scenario +
                          "' (expected A, B, or a config-file path)");
  }
  if (ov.dt) setup.scenario.step.dt = *ov.dt;
  if (ov.duration) setup.scenario.step.duration = *ov.duration;
  if (ov.alpha) setup.ufsmc.alpha = *ov.alpha;
  if (ov.gamma1) setup.ufsmc.gamma1 = *ov.gamma1;
  if (ov.eps1) setup.ufsmc.epsilon1 = *ov.eps1;
  if (ov.eps2) setup.ufsmc.epsilon2 = *ov.eps2;
  if (ov.k) setup.smc.k = *ov.k;
  if (ov.lambda) setup.smc.lambda = *ov.lambda;
  if (ov.eps) setup.smc.epsilon = *ov.eps;
  setup.scenario.validate();
  setup.ufsmc.validate(setup.scenario.disturbance.bound());
  setup.smc.validate();
  return setup;
}

std::string default_out_dir() {
  if (const char* env = std::getenv("MRP_SIM_OUT"); env && *env) {
    return env;
  }
  return "./out";
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(9) << x;
  return os.str();
}

/// Runs one controller, writes its telemetry, and returns the tagged metrics.
RunResult run_and_emit(const SimulationSetup& setup, ControllerKind kind,
                       const std::string& out_dir) {
  const std::vector<SimRecord> records = run_simulation(setup, kind);
  std::filesystem::create_directories(out_dir);
  const std::string stem =
      setup.scenario.name + "_" + controller_name(kind);
  emit_csv(records, out_dir + "/" + stem + ".csv");
  emit_plot_data(records, out_dir + "/" + stem + "_plots");

  RunResult result;
  result.scenario_name = setup.scenario.name;
  result.controller = kind;
  result.metrics = compute_metrics(
      records, theta_target_for(records.front().theta, kind));
  return result;
}

void print_metrics(const RunResult& r) {
  const Metrics& m = r.metrics;
  std::cout << "scenario " << r.scenario_name << ", controller "
            << controller_name(r.controller) << ":\n";
  std::cout << "  convergence_time_s:  "
            << (m.convergence_time ? fmt(*m.convergence_time) : "unconverged")
            << "\n";
  std::cout << "  total_rotation_rad:  " << fmt(m.total_rotation) << "\n";
  std::cout << "  effort_Nms:          " << fmt(m.effort) << "\n";
  std::cout << "  max_torque_Nm:       " << fmt(m.max_torque) << "\n";
  std::cout << "  theta_target_rad:    " << fmt(m.theta_target) << "\n";
  std::cout << "  unwound:             " << (m.unwound ? "yes" : "no") << "\n";
}

int cmd_simulate(const std::string& scenario, const std::string& controller,
                 const std::string& out_dir, const Overrides& ov) {
  const SimulationSetup setup = resolve_setup(scenario, ov);
  std::vector<ControllerKind> kinds;
  if (controller == "ufsmc") {
    kinds = {ControllerKind::Ufsmc};
  } else if (controller == "smc") {
    kinds = {ControllerKind::Smc};
  } else if (controller == "both") {
    kinds = {ControllerKind::Ufsmc, ControllerKind::Smc};
  } else {
    throw ValidationError("unknown controller '" + controller +
                          "' (expected ufsmc, smc, or both)");
  }
  for (ControllerKind kind : kinds) {
    print_metrics(run_and_emit(setup, kind, out_dir));
  }
  return 0;
}

int cmd_compare(const std::string& scenario, const std::string& out_dir,
                const Overrides& ov) {
  const SimulationSetup setup = resolve_setup(scenario, ov);
  // The two runs are independent and deterministic; execute them
  // concurrently and serialize all file writes after joining.
  auto fut_u = std::async(std::launch::async, [&] {
    return run_simulation(setup, ControllerKind::Ufsmc);
  });
  auto fut_s = std::async(std::launch::async, [&] {
    return run_simulation(setup, ControllerKind::Smc);
  });
  const std::vector<SimRecord> rec_u = fut_u.get();
  const std::vector<SimRecord> rec_s = fut_s.get();

  std::filesystem::create_directories(out_dir);
  const std::string base = out_dir + "/" + setup.scenario.name;
  emit_csv(rec_u, base + "_ufsmc.csv");
  emit_csv(rec_s, base + "_smc.csv");

  RunResult a{setup.scenario.name, ControllerKind::Ufsmc,
              compute_metrics(rec_u, theta_target_for(rec_u.front().theta,
                                                      ControllerKind::Ufsmc))};
  RunResult b{setup.scenario.name, ControllerKind::Smc,
              compute_metrics(rec_s, theta_target_for(rec_s.front().theta,
                                                      ControllerKind::Smc))};
  const Comparison cmp = compare_runs(a, b);

  std::cout << "scenario " << cmp.scenario_name << ": " << cmp.controller_a
            << " vs " << cmp.controller_b << "\n";
  std::cout << std::left << std::setw(22) << "metric" << std::right
            << std::setw(14) << cmp.controller_a << std::setw(14)
            << cmp.controller_b << std::setw(14) << "delta" << std::setw(14)
            << "ratio" << "\n";
  for (const ComparisonRow& row : cmp.rows) {
    std::cout << std::left << std::setw(22) << row.metric << std::right
              << std::setw(14) << fmt(row.value_a) << std::setw(14)
              << fmt(row.value_b) << std::setw(14) << fmt(row.delta)
              << std::setw(14) << fmt(row.ratio) << "\n";
  }
  std::cout << "unwound: " << cmp.controller_a << " "
            << (cmp.a_unwound ? "yes" : "no") << ", " << cmp.controller_b
            << " " << (cmp.b_unwound ? "yes" : "no") << "\n";
  return 0;
}

int cmd_verify() {
  int violations = 0;
  for (const std::string name : {"A", "B"}) {
    const SimulationSetup setup = builtin_setup(name);
    const std::vector<SimRecord> records =
        run_simulation(setup, ControllerKind::Ufsmc);
    const MonitorReport rep =
        monitor_invariants(records, setup.ufsmc, setup.scenario.J);
    std::cout << "scenario " << name << " (ufsmc) monitor report:\n";
    std::cout << "  rotation-rate identity max residual [rad/s]: "
              << fmt(rep.lemma1_max_residual) << "\n";
    std::cout << "  reaching_time_s:                    "
              << fmt(rep.reaching_time) << "\n";
    std::cout << "  v2_violations:                      "
              << rep.v2_violations << "\n";
    std::cout << "  v1_violations_after_reaching:       "
              << rep.v1_violations_after_reaching << "\n";
    std::cout << "  theta_monotonicity_violations:      "
              << rep.theta_monotonicity_violations << "\n";
    violations += rep.v2_violations + rep.v1_violations_after_reaching +
                  rep.theta_monotonicity_violations;
  }
  if (violations > 0) {
    std::cerr << "verify: " << violations << " invariant violation(s)\n";
    return 3;
  }
  std::cout << "verify: all invariants hold\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigid-spacecraft attitude-maneuver simulator: "
               "unwinding-free sliding mode control over Modified Rodrigues "
               "Parameters, with a baseline sliding-mode controller for "
               "comparison."};
  app.require_subcommand(1);

  std::string scenario = "A";
  std::string controller = "ufsmc";
  std::string out_dir = default_out_dir();
  Overrides ov;

  CLI::App* sim = app.add_subcommand(
      "simulate", "run one scenario and write telemetry");
  sim->add_option("--scenario", scenario,
                  "built-in scenario (A | B) or config-file path");
  sim->add_option("--controller", controller, "ufsmc | smc | both");
  sim->add_option("--out", out_dir, "output directory");
  add_override_flags(sim, ov);

  CLI::App* cmp = app.add_subcommand(
      "compare", "run both controllers on one scenario");
  cmp->add_option("--scenario", scenario,
                  "built-in scenario (A | B) or config-file path");
  cmp->add_option("--out", out_dir, "output directory");
  add_override_flags(cmp, ov);

  app.add_subcommand("verify",
                     "run the invariant monitors on both built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand("simulate")) {
      return cmd_simulate(scenario, controller, out_dir, ov);
    }
    if (app.got_subcommand("compare")) {
      return cmd_compare(scenario, out_dir, ov);
    }
    return cmd_verify();
  } catch (const NonFiniteState& ex) {
    std::cerr << "numerical failure: " << ex.what() << "\n";
    return 2;
  } catch (const NonFiniteControl& ex) {
    std::cerr << "numerical failure: " << ex.what() << "\n";
    return 2;
  } catch (const SimulationError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}
