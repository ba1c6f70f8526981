/// baseline_smc.hpp — the comparison controller: a classical boundary-layer
/// sliding mode attitude law.
///
/// Only the gain set (k, lambda, epsilon) of this baseline is pinned by the
/// reference maneuver targets; the law itself is the standard construction,
/// using the sliding surface
///   s_b = omega_e - (1/lambda) * sigma_e
/// and the torque
///   u = skew(omega_e) J omega_e + (1/lambda) J M(sigma_e) omega_e
///       - k J sat(s_b / epsilon),
/// where sat is the componentwise clamp to [-1, 1]. With the default
/// lambda = -0.5 the on-surface kinematics obey omega_e = -2 sigma_e, which
/// contracts the attitude error at the rate that lands Scenario A settling
/// inside the 9-16 s acceptance window and completes the Scenario B unwinding
/// rotation (~3.5 rad) within the run. Reading lambda directly as the surface
/// slope (omega_e = lambda sigma_e) was tried first and rejected: it gives an
/// 8 s error time constant, converging around t = 27 s — outside every stated
/// acceptance bound for this controller.
///
/// Because its sign function acts componentwise through a saturation, the
/// baseline leaves the initial rotation axis during the reaching phase and,
/// unlike the unwinding-free law, always steers the rotation angle toward 0 —
/// the long way around when theta(0) > pi.
#pragma once

#include <utility>

#include "attsim/dynamics.hpp"
#include "attsim/ufsmc.hpp"

namespace attsim {

/// Gains of the comparison controller.
struct SmcParams {
  double k = 1.5;       ///< reaching gain, > 0
  double lambda = -0.5; ///< reciprocal surface slope; must be negative
  double epsilon = 0.5; ///< boundary-layer width of the saturation, > 0

  /// Throws ValidationError when k <= 0, epsilon <= 0, or lambda >= 0.
  void validate() const;
};

/// Evaluates the baseline law. Diagnostics carry the switching variable s_b
/// and the torque split (u_eq = gyroscopic + surface feedforward,
/// u_n = saturated reaching term); the shaping fields (g, rho, h, gamma2)
/// do not exist for this controller and are left zero.
/// Throws NonFiniteControl when any torque component is non-finite.
std::pair<Vec3, ControlDiagnostics> smc_control(const BodyErrorState& state,
                                                const SmcParams& params,
                                                const InertiaMatrix& J);

} // namespace attsim
