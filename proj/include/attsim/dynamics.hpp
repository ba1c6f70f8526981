/// dynamics.hpp — rigid-body attitude-error dynamics and the fixed-step
/// integrator.
///
/// The simulated plant is the rest-to-rest error system
///   sigma_e_dot = M(sigma_e) * omega_e
///   J * omega_e_dot = -skew(omega_e) * J * omega_e + u + d(t)
/// with constant inertia J, control torque u, and a bounded sinusoidal
/// disturbance d(t).
#pragma once

#include <cstddef>

#include "attsim/attitude_math.hpp"
#include "attsim/errors.hpp"

namespace attsim {

/// Constant spacecraft inertia with cached inverse and the smallest
/// eigenvalue of the inverse (used by the dynamic switching gain).
class InertiaMatrix {
public:
  /// Validates symmetry and positive definiteness; caches J^-1.
  /// Throws ValidationError on a non-symmetric or non-SPD matrix.
  explicit InertiaMatrix(const Mat3& J);

  /// Convenience constructor for a diagonal inertia.
  static InertiaMatrix diagonal(const Vec3& moments);

  const Mat3& J() const { return J_; }
  const Mat3& J_inverse() const { return J_inv_; }

  /// Smallest eigenvalue of J^-1 (reciprocal of the largest moment for a
  /// diagonal inertia); strictly positive.
  double lambda_min_inverse() const { return lambda_min_inv_; }

private:
  Mat3 J_;
  Mat3 J_inv_;
  double lambda_min_inv_;
};

/// State pair evolved by the error dynamics.
struct BodyErrorState {
  Vec3 sigma_e = Vec3::Zero(); ///< attitude error (dimensionless)
  Vec3 omega_e = Vec3::Zero(); ///< angular-velocity error, rad/s
};

/// Sinusoidal external torque
///   d(t) = scale * [sin(f t), 0.5 sin(f t), -cos(f t)],  N*m.
/// The declared bound scale*sqrt(1 + 0.25 + 1) dominates |d(t)| for all t and
/// is what controller gain validation checks against.
struct DisturbanceModel {
  double scale = 1e-2;    ///< amplitude, N*m
  double frequency = 0.05; ///< rad/s

  Vec3 at(double t) const;
  /// Declared bound on |d(t)|: scale * sqrt(2.25) = 1.5 * scale.
  double bound() const { return scale * 1.5; }
  void validate() const;
};

/// Fixed integration step and total duration.
struct StepConfig {
  double dt = 1e-3;      ///< s, must satisfy 0 < dt <= 0.01
  double duration = 20.0; ///< s, must be an integral multiple of dt

  /// Throws ValidationError when dt is out of range or duration/dt is not
  /// integral within rounding.
  void validate() const;
  /// Number of integration steps (duration / dt, rounded).
  std::size_t step_count() const;
};

/// Time derivative of the error state.
struct StateDerivative {
  Vec3 sigma_e_dot;
  Vec3 omega_e_dot;
};

/// Right-hand side of the error dynamics:
///   (M(sigma_e) omega_e,  J^-1 (-skew(omega_e) J omega_e + u + d)).
StateDerivative error_dynamics_rhs(const BodyErrorState& state, const Vec3& u,
                                   const Vec3& d, const InertiaMatrix& J);

/// One classical 4th-order Runge-Kutta step of the error dynamics. The
/// control torque is held constant across the step (zero-order hold, i.e.
/// the controller is sampled once at the step start); the disturbance is
/// re-evaluated at the internal stage times. Throws NonFiniteState (with the
/// failing time in the message) when any output component is non-finite.
BodyErrorState rk4_step(const BodyErrorState& state, const Vec3& u, double t,
                        double dt, const InertiaMatrix& J,
                        const DisturbanceModel& disturbance);

} // namespace attsim
