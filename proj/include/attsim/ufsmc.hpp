/// ufsmc.hpp — the unwinding-free sliding mode attitude controller.
///
/// The switching function is
///   s = omega_e - alpha * rho(sigma_e) * sigma_e,
///   rho = sinh(g) / (1 + sigma_e . sigma_e),   g = atan(e . sigma_e) - pi/4,
/// with e the rotation axis frozen from the initial error. Because g changes
/// sign at theta = pi, the on-surface dynamics steer the rotation angle to 0
/// when theta(0) < pi and to 2*pi when theta(0) > pi — the controller never
/// "unwinds" through the long way around.
///
/// The torque is u = u_eq + u_n with the surface-holding part
///   u_eq = skew(omega_e) J omega_e + alpha J rho_dot sigma_e
///          + alpha J rho sigma_e_dot
/// and the disturbance-rejecting part
///   u_n = -(gamma1 + gamma2(t)) * l(s),
/// where gamma2 = (alpha / lambda_min(J^-1)) * |h_dot|, h = rho * |sigma_e|,
/// and l is a boundary-layer-smoothed sign function.
#pragma once

#include <utility>

#include "attsim/attitude_math.hpp"
#include "attsim/dynamics.hpp"

namespace attsim {

/// Gains of the unwinding-free controller.
struct UfsmcParams {
  double alpha = 2.0;     ///< sliding-surface gain, 1/s scaled, > 0
  double gamma1 = 30.0;   ///< static switching gain, N*m, >= disturbance bound
  double epsilon1 = 0.5;  ///< boundary-layer half-width on s
  double epsilon2 = 1e-4; ///< singularity-guard parameter (clamps |sigma_i| at 1/epsilon2)

  /// Validates positivity and gamma1 >= 1.2 * disturbance_bound (margin
  /// covers discretization). Throws ValidationError naming the field.
  void validate(double disturbance_bound) const;
};

/// Per-maneuver memory: the rotation axis, computed once from the initial
/// attitude error and immutable afterwards.
struct UfsmcMemory {
  Vec3 e;

  /// Throws ZeroInitialError when |sigma_e0| <= 1e-9.
  static UfsmcMemory from_initial(const Vec3& sigma_e0);
};

/// Controller internals exposed per step for monitors and telemetry.
struct ControlDiagnostics {
  Vec3 s = Vec3::Zero();    ///< switching variable
  double g = 0.0;           ///< shaped projection, atan(e.sigma_e) - pi/4
  double rho = 0.0;         ///< surface shaping factor
  double rho_dot = 0.0;     ///< analytic time derivative of rho, 1/s
  double h = 0.0;           ///< rho * |sigma_e|
  double h_dot = 0.0;       ///< analytic time derivative of h, 1/s
  double gamma2 = 0.0;      ///< dynamic switching gain, N*m, >= 0
  Vec3 u_eq = Vec3::Zero(); ///< surface-holding torque component, N*m
  Vec3 u_n = Vec3::Zero();  ///< switching torque component, N*m
  double theta = 0.0;       ///< rotation angle about the frozen axis, rad
};

/// g(sigma_e) = atan(e . sigma_e) - pi/4; range (-3*pi/4, pi/4).
double g_of(const Vec3& sigma_e, const Vec3& e);

/// rho(sigma_e) = sinh(g(sigma_e)) / (1 + sigma_e . sigma_e).
/// On-axis this equals sinh(theta/4 - pi/4) * cos^2(theta/4): negative for
/// theta < pi, zero at theta = pi, positive for theta > pi.
double rho_of(const Vec3& sigma_e, const Vec3& e);

/// h(sigma_e) = rho(sigma_e) * |sigma_e|.
double h_of(const Vec3& sigma_e, const Vec3& e);

/// Switching variable s = omega_e - alpha * rho * sigma_e.
Vec3 switching_function(const BodyErrorState& state, const Vec3& e,
                        double alpha);

/// Analytic rho_dot by the chain rule, with sigma_e_dot supplied by the
/// caller (the model value M(sigma_e) * omega_e):
///   g_dot   = e . sigma_e_dot / (1 + (e . sigma_e)^2)
///   rho_dot = [cosh(g) g_dot (1 + sigma_e.sigma_e)
///              - 2 sinh(g) (sigma_e . sigma_e_dot)] / (1 + sigma_e.sigma_e)^2
double rho_dot_analytic(const BodyErrorState& state, const Vec3& e,
                        const Vec3& sigma_e_dot);

/// Analytic h_dot = rho_dot |sigma_e| + rho (sigma_e . sigma_e_dot)/|sigma_e|;
/// the second term is taken as 0 when |sigma_e| < 1e-9 (it is bounded by
/// |sigma_e_dot| and the maneuver is at goal there).
double h_dot_analytic(const BodyErrorState& state, const Vec3& e,
                      const Vec3& sigma_e_dot);

/// Dynamic switching gain gamma2 = (alpha / lambda_min(J^-1)) * |h_dot|,
/// always >= 0 and 0 at rest.
double gamma2_of(const BodyErrorState& state, const Vec3& e, double alpha,
                 const InertiaMatrix& J);

/// Boundary-layer-smoothed sign, applied componentwise:
///   l(x) = sgn(x)                      for |x| >= epsilon1
///        = atan(x * tan(1) / epsilon1) for |x| <  epsilon1,
/// continuous at the boundary (both branches give magnitude 1), odd,
/// monotone, and bounded by 1. sgn(0) is taken as 0.
Vec3 smooth_sign(const Vec3& s, double epsilon1);

/// Singularity guard: every component with |sigma_i| >= 1/epsilon2 is
/// replaced by sgn(sigma_i)/epsilon2; the rest pass through unchanged.
Vec3 clamp_sigma(const Vec3& sigma_e, double epsilon2);

/// Full control law. `state` must already be guarded by clamp_sigma and
/// `mem` initialized from the initial error. Throws NonFiniteControl when
/// any torque component is non-finite.
std::pair<Vec3, ControlDiagnostics> ufsmc_control(const BodyErrorState& state,
                                                  const UfsmcParams& params,
                                                  const UfsmcMemory& mem,
                                                  const InertiaMatrix& J);

} // namespace attsim
