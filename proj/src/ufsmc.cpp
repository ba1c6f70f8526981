#include "attsim/ufsmc.hpp"

#include <cmath>

#include "attsim/errors.hpp"

namespace attsim {

namespace {
constexpr double kGoalNorm = 1e-9; // below this the maneuver is at goal
constexpr double kGainMargin = 1.2; // gamma1 headroom over the disturbance bound

bool all_finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}
} // namespace

void UfsmcParams::validate(double disturbance_bound) const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("ufsmc.alpha: must be finite and > 0");
  }
  if (!(epsilon1 > 0.0) || !std::isfinite(epsilon1)) {
    throw ValidationError("ufsmc.eps1: must be finite and > 0");
  }
  if (!(epsilon2 > 0.0) || !std::isfinite(epsilon2)) {
    throw ValidationError("ufsmc.eps2: must be finite and > 0");
  }
  if (!std::isfinite(gamma1) || gamma1 < kGainMargin * disturbance_bound) {
    throw ValidationError(
        "ufsmc.gamma1: below the disturbance bound (need gamma1 >= 1.2 * " +
        std::to_string(disturbance_bound) + ")");
  }
}

UfsmcMemory UfsmcMemory::from_initial(const Vec3& sigma_e0) {
  return UfsmcMemory{euler_axis_from_initial(sigma_e0)};
}

double g_of(const Vec3& sigma_e, const Vec3& e) {
  return std::atan(e.dot(sigma_e)) - M_PI / 4.0;
}

double rho_of(const Vec3& sigma_e, const Vec3& e) {
  return std::sinh(g_of(sigma_e, e)) / (1.0 + sigma_e.squaredNorm());
}

double h_of(const Vec3& sigma_e, const Vec3& e) {
  return rho_of(sigma_e, e) * sigma_e.norm();
}

Vec3 switching_function(const BodyErrorState& state, const Vec3& e,
                        double alpha) {
  return state.omega_e - alpha * rho_of(state.sigma_e, e) * state.sigma_e;
}

double rho_dot_analytic(const BodyErrorState& state, const Vec3& e,
                        const Vec3& sigma_e_dot) {
  const Vec3& sigma = state.sigma_e;
  const double p = e.dot(sigma);
  const double g = std::atan(p) - M_PI / 4.0;
  const double g_dot = e.dot(sigma_e_dot) / (1.0 + p * p);
  const double one_plus_n2 = 1.0 + sigma.squaredNorm();
  return (std::cosh(g) * g_dot * one_plus_n2 -
          2.0 * std::sinh(g) * sigma.dot(sigma_e_dot)) /
         (one_plus_n2 * one_plus_n2);
}

double h_dot_analytic(const BodyErrorState& state, const Vec3& e,
                      const Vec3& sigma_e_dot) {
  const double norm = state.sigma_e.norm();
  const double rho_dot = rho_dot_analytic(state, e, sigma_e_dot);
  double h_dot = rho_dot * norm;
  if (norm >= kGoalNorm) {
    h_dot += rho_of(state.sigma_e, e) * state.sigma_e.dot(sigma_e_dot) / norm;
  }
  return h_dot;
}

double gamma2_of(const BodyErrorState& state, const Vec3& e, double alpha,
                 const InertiaMatrix& J) {
  const Vec3 sigma_e_dot = mrp_kinematics_matrix(state.sigma_e) * state.omega_e;
  const double h_dot = h_dot_analytic(state, e, sigma_e_dot);
  return alpha / J.lambda_min_inverse() * std::abs(h_dot);
}

Vec3 smooth_sign(const Vec3& s, double epsilon1) {
  const double slope = std::tan(1.0) / epsilon1;
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    const double x = s[i];
    if (std::abs(x) >= epsilon1) {
      out[i] = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    } else {
      out[i] = std::atan(x * slope);
    }
  }
  return out;
}

Vec3 clamp_sigma(const Vec3& sigma_e, double epsilon2) {
  const double limit = 1.0 / epsilon2;
  Vec3 out = sigma_e;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(out[i]) >= limit) {
      out[i] = std::copysign(limit, out[i]);
    }
  }
  return out;
}

std::pair<Vec3, ControlDiagnostics> ufsmc_control(const BodyErrorState& state,
                                                  const UfsmcParams& params,
                                                  const UfsmcMemory& mem,
                                                  const InertiaMatrix& J) {
  const Vec3& sigma = state.sigma_e;
  const Vec3& omega = state.omega_e;
  const Vec3 sigma_dot = mrp_kinematics_matrix(sigma) * omega;

  ControlDiagnostics diag;
  diag.g = g_of(sigma, mem.e);
  diag.rho = std::sinh(diag.g) / (1.0 + sigma.squaredNorm());
  diag.rho_dot = rho_dot_analytic(state, mem.e, sigma_dot);
  diag.h = diag.rho * sigma.norm();
  diag.h_dot = h_dot_analytic(state, mem.e, sigma_dot);
  diag.gamma2 = params.alpha / J.lambda_min_inverse() * std::abs(diag.h_dot);
  diag.s = omega - params.alpha * diag.rho * sigma;
  diag.theta = rotation_angle(sigma, mem.e);

  diag.u_eq = omega.cross(J.J() * omega) +
              params.alpha * diag.rho_dot * (J.J() * sigma) +
              params.alpha * diag.rho * (J.J() * sigma_dot);
  diag.u_n = -(params.gamma1 + diag.gamma2) * smooth_sign(diag.s, params.epsilon1);

  const Vec3 u = diag.u_eq + diag.u_n;
  if (!all_finite(u)) {
    throw NonFiniteControl("controller produced a non-finite torque");
  }
  return {u, diag};
}

} // namespace attsim
