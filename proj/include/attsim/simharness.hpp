/// simharness.hpp — scenario definitions, the closed-loop driver, maneuver
/// metrics, run comparison, and the invariant-monitor suite.
#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "attsim/baseline_smc.hpp"
#include "attsim/dynamics.hpp"
#include "attsim/ufsmc.hpp"

namespace attsim {

/// Which control law drives a run.
enum class ControllerKind { Ufsmc, Smc };

/// Short lowercase name used in file names and tables ("ufsmc" / "smc").
std::string controller_name(ControllerKind kind);

/// A rest-to-rest maneuver: initial and desired attitude, plant, and step.
struct Scenario {
  std::string name;           ///< "A", "B", or a config-file stem
  Vec3 sigma0 = Vec3::Zero(); ///< initial attitude
  Vec3 omega0 = Vec3::Zero(); ///< initial body rate, rad/s (must be 0)
  Vec3 sigma_d = Vec3::Zero(); ///< desired attitude
  Vec3 omega_d = Vec3::Zero(); ///< desired rate, rad/s (must be 0)
  InertiaMatrix J = InertiaMatrix::diagonal(Vec3(114.0, 86.0, 87.0));
  DisturbanceModel disturbance;
  StepConfig step;

  /// Enforces the rest-to-rest contract (omega0 = omega_d = 0) and the
  /// component invariants. Throws ValidationError.
  void validate() const;
};

/// A scenario bundled with both controllers' gains (what a config file or a
/// builtin name resolves to).
struct SimulationSetup {
  Scenario scenario;
  UfsmcParams ufsmc;
  SmcParams smc;
};

/// The two built-in rest-to-rest maneuvers:
///   "A": sigma_d = [0.1, 0.2, -0.3]          (theta(0) = 1.4321 rad < pi)
///   "B": sigma_d = [0.7809, 0.4685, -0.7809] (theta(0) = 3.5036 rad > pi)
/// both from sigma0 = 0 with the default plant and gains.
/// Throws ValidationError for any other name.
SimulationSetup builtin_setup(const std::string& name);

/// One telemetry row.
struct SimRecord {
  double t = 0.0;
  Vec3 sigma_e = Vec3::Zero();
  Vec3 omega_e = Vec3::Zero();
  double theta = 0.0; ///< rotation angle about the frozen axis, rad
  Vec3 u = Vec3::Zero();
  ControlDiagnostics diag;
  EulerAngles euler; ///< 3-2-1 angles of the recovered absolute attitude
  double V1 = 0.0;   ///< cosh(pi/4) - cosh(g): sliding-phase Lyapunov value
  double V2 = 0.0;   ///< 0.5 * s.s: reaching-phase Lyapunov value
  double v = 0.0;    ///< e . s: axis-projected switching variable
};

/// Simulates the scenario under the selected controller. Per step:
/// singularity clamp -> controller -> record -> integrator step; the
/// returned list has duration/dt + 1 records (t = 0 .. duration inclusive).
/// If the initial attitude error is numerically zero the run degenerates to
/// a single record with zero torque. Deterministic: identical inputs yield
/// bitwise-identical records. Propagates NonFiniteState / NonFiniteControl
/// with the failing timestamp.
std::vector<SimRecord> run_simulation(const SimulationSetup& setup,
                                      ControllerKind kind);

/// Aggregated maneuver metrics.
struct Metrics {
  /// First time after which |theta - theta_target| < 0.05 rad AND
  /// |omega_e| < 1e-3 rad/s hold for every later sample; empty when the
  /// predicate never holds through the end of the run.
  std::optional<double> convergence_time;
  double total_rotation = 0.0; ///< integral of |theta_dot| dt, rad
  double effort = 0.0;         ///< integral of |u| dt, N*m*s
  double max_torque = 0.0;     ///< max over time and axes of |u_i|, N*m
  double theta_target = 0.0;   ///< 0 or 2*pi
  bool unwound = false; ///< rotated more than pi + 0.05 when a shorter path existed
};

/// Computes metrics from a record list (theta_dot by central differences of
/// the theta column). Throws ValidationError on an empty list.
Metrics compute_metrics(const std::vector<SimRecord>& records,
                        double theta_target);

/// Rotation-angle target for a run: the unwinding-free controller steers to
/// 2*pi when theta(0) > pi and to 0 otherwise; the baseline always to 0.
double theta_target_for(double theta0, ControllerKind kind);

/// Violation counts and residuals for the monitored closed-loop properties.
struct MonitorReport {
  /// Worst |(theta(t+dt) - theta(t))/dt - e . omega_e(t+dt/2)| over the run,
  /// rad/s, with the midpoint rate taken as the mean of the two endpoint
  /// samples. Samples where the singularity clamp is active are excluded
  /// (the clamp deliberately freezes theta, decoupling it from omega_e).
  double lemma1_max_residual = 0.0;
  /// Steps with V2 growth beyond 1e-9 while |s|_inf >= epsilon1.
  int v2_violations = 0;
  /// Steps after reaching_time with V1 growth beyond 1e-6.
  int v1_violations_after_reaching = 0;
  /// Samples drifting more than 1e-3 rad against the expected rotation
  /// direction (measured against the running extremum of theta).
  int theta_monotonicity_violations = 0;
  /// First time with |s|_inf < epsilon1 never exceeded afterward; +infinity
  /// when the band is never permanently entered.
  double reaching_time = std::numeric_limits<double>::infinity();
};

/// Evaluates the monitor suite on a completed run.
MonitorReport monitor_invariants(const std::vector<SimRecord>& records,
                                 const UfsmcParams& params,
                                 const InertiaMatrix& J);

/// Metrics of one run, tagged for comparison.
struct RunResult {
  std::string scenario_name;
  ControllerKind controller;
  Metrics metrics;
};

/// One row of a two-run comparison table.
struct ComparisonRow {
  std::string metric;
  double value_a = 0.0;
  double value_b = 0.0;
  double delta = 0.0; ///< value_a - value_b
  double ratio = 0.0; ///< value_a / value_b (quiet NaN when undefined)
};

/// Per-metric deltas and ratios between two runs of the same scenario,
/// plus which controller unwound. Throws ScenarioMismatch when the runs
/// belong to different scenarios.
struct Comparison {
  std::string scenario_name;
  std::string controller_a;
  std::string controller_b;
  std::vector<ComparisonRow> rows;
  bool a_unwound = false;
  bool b_unwound = false;
};

Comparison compare_runs(const RunResult& a, const RunResult& b);

} // namespace attsim
