#include "attsim/simharness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace attsim {

namespace {
constexpr double kGoalNorm = 1e-9;       // zero-initial-error detection
constexpr double kThetaBand = 0.05;      // rad, convergence band on theta
constexpr double kOmegaBand = 1e-3;      // rad/s, convergence band on |omega_e|
constexpr double kV2StepTolerance = 1e-9;
constexpr double kV1StepTolerance = 1e-6;
constexpr double kMonotonicityTolerance = 1e-3; // rad
constexpr double kUnwindingMargin = 0.05;       // rad over pi

double kappa() { return std::cosh(M_PI / 4.0); }

/// Absolute attitude for telemetry: the error state stores the quotient-form
/// error whose conjugate composes with the desired attitude, so that the
/// first record reproduces sigma0 and the final record lands on sigma_d
/// (or its long-angle equivalent when the maneuver wraps past a half turn).
Vec3 absolute_attitude(const Vec3& sigma_e, const Vec3& sigma_d) {
  return mrp_compose(mrp_conjugate(sigma_e), sigma_d);
}

SimRecord make_record(double t, const BodyErrorState& state, const Vec3& u,
                      const ControlDiagnostics& diag, const Vec3& e,
                      const Vec3& sigma_d) {
  SimRecord rec;
  rec.t = t;
  rec.sigma_e = state.sigma_e;
  rec.omega_e = state.omega_e;
  rec.u = u;
  rec.diag = diag;
  rec.theta = rotation_angle(state.sigma_e, e);
  rec.diag.theta = rec.theta;
  rec.euler = mrp_to_euler_angles(absolute_attitude(state.sigma_e, sigma_d));
  rec.V1 = kappa() - std::cosh(g_of(state.sigma_e, e));
  rec.V2 = 0.5 * diag.s.squaredNorm();
  rec.v = e.dot(diag.s);
  return rec;
}
} // namespace

std::string controller_name(ControllerKind kind) {
  return kind == ControllerKind::Ufsmc ? "ufsmc" : "smc";
}

void Scenario::validate() const {
  const auto check_finite = [](const Vec3& v, const char* what) {
    if (!v.allFinite()) {
      throw ValidationError(std::string(what) + ": non-finite components");
    }
  };
  check_finite(sigma0, "sigma0");
  check_finite(sigma_d, "sigma_d");
  if (omega0 != Vec3::Zero()) {
    throw ValidationError("omega0: rest-to-rest maneuvers require omega0 = 0");
  }
  if (omega_d != Vec3::Zero()) {
    throw ValidationError("omega_d: rest-to-rest maneuvers require omega_d = 0");
  }
  disturbance.validate();
  step.validate();
}

SimulationSetup builtin_setup(const std::string& name) {
  SimulationSetup setup;
  if (name == "A") {
    setup.scenario.sigma_d = Vec3(0.1, 0.2, -0.3);
  } else if (name == "B") {
    setup.scenario.sigma_d = Vec3(0.7809, 0.4685, -0.7809);
  } else {
    throw ValidationError("unknown scenario '" + name + "' (expected A or B)");
  }
  setup.scenario.name = name;
  setup.scenario.validate();
  setup.ufsmc.validate(setup.scenario.disturbance.bound());
  setup.smc.validate();
  return setup;
}

std::vector<SimRecord> run_simulation(const SimulationSetup& setup,
                                      ControllerKind kind) {
  const Scenario& scn = setup.scenario;
  scn.validate();
  setup.ufsmc.validate(scn.disturbance.bound());
  setup.smc.validate();

  BodyErrorState state;
  state.sigma_e = mrp_error_paper(scn.sigma0, scn.sigma_d);
  state.omega_e = scn.omega0 - scn.omega_d;

  std::vector<SimRecord> records;
  if (state.sigma_e.norm() <= kGoalNorm) {
    // Already at goal: one quiescent record, no control shaping.
    SimRecord rec;
    rec.sigma_e = state.sigma_e;
    rec.omega_e = state.omega_e;
    rec.diag.g = -M_PI / 4.0;
    rec.diag.rho = std::sinh(-M_PI / 4.0);
    rec.euler = mrp_to_euler_angles(absolute_attitude(state.sigma_e, scn.sigma_d));
    records.push_back(rec);
    return records;
  }

  const Vec3 e = euler_axis_from_initial(state.sigma_e);
  const UfsmcMemory memory{e};
  const std::size_t steps = scn.step.step_count();
  const double dt = scn.step.dt;
  records.reserve(steps + 1);

  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    state.sigma_e = clamp_sigma(state.sigma_e, setup.ufsmc.epsilon2);

    Vec3 u;
    ControlDiagnostics diag;
    try {
      if (kind == ControllerKind::Ufsmc) {
        std::tie(u, diag) = ufsmc_control(state, setup.ufsmc, memory, scn.J);
      } else {
        std::tie(u, diag) = smc_control(state, setup.smc, scn.J);
      }
    } catch (const NonFiniteControl& ex) {
      std::ostringstream msg;
      msg << ex.what() << " at t = " << t << " s";
      throw NonFiniteControl(msg.str());
    }

    records.push_back(make_record(t, state, u, diag, e, scn.sigma_d));
    if (i < steps) {
      state = rk4_step(state, u, t, dt, scn.J, scn.disturbance);
    }
  }
  return records;
}

double theta_target_for(double theta0, ControllerKind kind) {
  if (kind == ControllerKind::Ufsmc && theta0 > M_PI) {
    return 2.0 * M_PI;
  }
  return 0.0;
}

Metrics compute_metrics(const std::vector<SimRecord>& records,
                        double theta_target) {
  if (records.empty()) {
    throw ValidationError("metrics: empty record list");
  }
  Metrics m;
  m.theta_target = theta_target;

  const std::size_t n = records.size();
  if (n == 1) {
    m.convergence_time = records.front().t;
    return m;
  }

  // Convergence: latest sample violating the band determines the first time
  // after which the predicate holds through the end of the run.
  std::size_t first_ok = 0;
  for (std::size_t i = n; i-- > 0;) {
    const bool ok = std::abs(records[i].theta - theta_target) < kThetaBand &&
                    records[i].omega_e.norm() < kOmegaBand;
    if (!ok) {
      first_ok = i + 1;
      break;
    }
  }
  if (first_ok < n) {
    m.convergence_time = records[first_ok].t;
  }

  // theta_dot by central differences (one-sided at the ends), then
  // trapezoidal integrals for rotation and effort.
  std::vector<double> theta_dot(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      theta_dot[i] = (records[1].theta - records[0].theta) /
                     (records[1].t - records[0].t);
    } else if (i == n - 1) {
      theta_dot[i] = (records[i].theta - records[i - 1].theta) /
                     (records[i].t - records[i - 1].t);
    } else {
      theta_dot[i] = (records[i + 1].theta - records[i - 1].theta) /
                     (records[i + 1].t - records[i - 1].t);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = records[i + 1].t - records[i].t;
    m.total_rotation +=
        0.5 * h * (std::abs(theta_dot[i]) + std::abs(theta_dot[i + 1]));
    m.effort += 0.5 * h * (records[i].u.norm() + records[i + 1].u.norm());
  }
  for (const SimRecord& rec : records) {
    m.max_torque = std::max(m.max_torque, rec.u.cwiseAbs().maxCoeff());
  }
  // Any rotation beyond a half turn (plus margin) means the shorter way
  // around was available and unused.
  m.unwound = m.total_rotation > M_PI + kUnwindingMargin;
  return m;
}

MonitorReport monitor_invariants(const std::vector<SimRecord>& records,
                                 const UfsmcParams& params,
                                 const InertiaMatrix& /*J*/) {
  MonitorReport report;
  if (records.size() < 2) {
    report.reaching_time = records.empty() ? 0.0 : records.front().t;
    return report;
  }

  const Vec3 e = euler_axis_from_initial(records.front().sigma_e);
  const double theta0 = records.front().theta;
  const bool increasing = theta0 > M_PI;
  const double clamp_limit = 1.0 / params.epsilon2;

  // Reaching time: the band |s|_inf < epsilon1, once entered, must never be
  // left again; scan backwards for the last excursion.
  std::size_t reach_index = 0;
  bool found_excursion = false;
  for (std::size_t i = records.size(); i-- > 0;) {
    if (records[i].diag.s.cwiseAbs().maxCoeff() >= params.epsilon1) {
      reach_index = i + 1;
      found_excursion = true;
      break;
    }
  }
  if (found_excursion && reach_index >= records.size()) {
    report.reaching_time = std::numeric_limits<double>::infinity();
  } else {
    report.reaching_time = records[reach_index].t;
  }

  double running_extremum = theta0;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const SimRecord& a = records[i];
    const SimRecord& b = records[i + 1];
    const double dt = b.t - a.t;

    // Rotation-rate identity, skipped while the singularity clamp is active
    // (a clamped component freezes theta by construction).
    const bool clamped =
        a.sigma_e.cwiseAbs().maxCoeff() >= clamp_limit ||
        b.sigma_e.cwiseAbs().maxCoeff() >= clamp_limit;
    if (!clamped) {
      const double midpoint_rate = 0.5 * (e.dot(a.omega_e) + e.dot(b.omega_e));
      const double residual =
          std::abs((b.theta - a.theta) / dt - midpoint_rate);
      report.lemma1_max_residual =
          std::max(report.lemma1_max_residual, residual);
    }

    // Reaching-phase Lyapunov decrease applies while s is outside the band.
    if (a.diag.s.cwiseAbs().maxCoeff() >= params.epsilon1 &&
        b.V2 > a.V2 + kV2StepTolerance) {
      ++report.v2_violations;
    }

    // Sliding-phase Lyapunov decrease applies after reaching.
    if (a.t >= report.reaching_time && b.V1 > a.V1 + kV1StepTolerance) {
      ++report.v1_violations_after_reaching;
    }

    // Rotation angle must not retreat from its running extremum by more
    // than the chattering tolerance.
    if (increasing) {
      if (b.theta < running_extremum - kMonotonicityTolerance) {
        ++report.theta_monotonicity_violations;
      }
      running_extremum = std::max(running_extremum, b.theta);
    } else {
      if (b.theta > running_extremum + kMonotonicityTolerance) {
        ++report.theta_monotonicity_violations;
      }
      running_extremum = std::min(running_extremum, b.theta);
    }
  }
  return report;
}

Comparison compare_runs(const RunResult& a, const RunResult& b) {
  if (a.scenario_name != b.scenario_name) {
    throw ScenarioMismatch("cannot compare runs of scenarios '" +
                           a.scenario_name + "' and '" + b.scenario_name + "'");
  }
  Comparison cmp;
  cmp.scenario_name = a.scenario_name;
  cmp.controller_a = controller_name(a.controller);
  cmp.controller_b = controller_name(b.controller);
  cmp.a_unwound = a.metrics.unwound;
  cmp.b_unwound = b.metrics.unwound;

  const double nan = std::numeric_limits<double>::quiet_NaN();
  const auto row = [&](const std::string& name, double va, double vb) {
    ComparisonRow r;
    r.metric = name;
    r.value_a = va;
    r.value_b = vb;
    r.delta = va - vb;
    r.ratio = vb != 0.0 ? va / vb : nan;
    cmp.rows.push_back(r);
  };
  const double inf = std::numeric_limits<double>::infinity();
  row("convergence_time_s", a.metrics.convergence_time.value_or(inf),
      b.metrics.convergence_time.value_or(inf));
  row("total_rotation_rad", a.metrics.total_rotation, b.metrics.total_rotation);
  row("effort_Nms", a.metrics.effort, b.metrics.effort);
  row("max_torque_Nm", a.metrics.max_torque, b.metrics.max_torque);
  return cmp;
}

} // namespace attsim
