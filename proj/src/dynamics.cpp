#include "attsim/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace attsim {

namespace {
constexpr double kSymmetryTolerance = 1e-9;
constexpr double kInverseTolerance = 1e-10;

bool all_finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}
} // namespace

InertiaMatrix::InertiaMatrix(const Mat3& J) : J_(J) {
  if (!J.allFinite()) {
    throw ValidationError("inertia: non-finite entries");
  }
  if ((J - J.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw ValidationError("inertia: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat3> eig(J);
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError("inertia: matrix is not positive definite");
  }
  J_inv_ = J.inverse();
  if (((J_ * J_inv_) - Mat3::Identity()).cwiseAbs().maxCoeff() >
      kInverseTolerance) {
    throw ValidationError("inertia: inversion failed the residual check");
  }
  // Eigenvalues of J^-1 are the reciprocals of those of J.
  lambda_min_inv_ = 1.0 / eig.eigenvalues().maxCoeff();
}

InertiaMatrix InertiaMatrix::diagonal(const Vec3& moments) {
  return InertiaMatrix(Mat3(moments.asDiagonal()));
}

Vec3 DisturbanceModel::at(double t) const {
  const double phase = frequency * t;
  return scale * Vec3(std::sin(phase), 0.5 * std::sin(phase), -std::cos(phase));
}

void DisturbanceModel::validate() const {
  if (!(scale >= 0.0) || !std::isfinite(scale)) {
    throw ValidationError("disturbance.scale: must be finite and >= 0");
  }
  if (!(frequency >= 0.0) || !std::isfinite(frequency)) {
    throw ValidationError("disturbance.freq: must be finite and >= 0");
  }
}

void StepConfig::validate() const {
  if (!(dt > 0.0) || !(dt <= 0.01)) {
    throw ValidationError("dt: must satisfy 0 < dt <= 0.01");
  }
  if (!(duration > 0.0) || !std::isfinite(duration)) {
    throw ValidationError("duration: must be finite and > 0");
  }
  const double steps = duration / dt;
  if (std::abs(steps - std::round(steps)) > 1e-6 * std::max(1.0, steps)) {
    throw ValidationError("duration: must be an integral multiple of dt");
  }
}

std::size_t StepConfig::step_count() const {
  return static_cast<std::size_t>(std::llround(duration / dt));
}

StateDerivative error_dynamics_rhs(const BodyErrorState& state, const Vec3& u,
                                   const Vec3& d, const InertiaMatrix& J) {
  StateDerivative out;
  out.sigma_e_dot = mrp_kinematics_matrix(state.sigma_e) * state.omega_e;
  out.omega_e_dot =
      J.J_inverse() *
      (-state.omega_e.cross(J.J() * state.omega_e) + u + d);
  return out;
}

BodyErrorState rk4_step(const BodyErrorState& state, const Vec3& u, double t,
                        double dt, const InertiaMatrix& J,
                        const DisturbanceModel& disturbance) {
  const auto rhs = [&](const BodyErrorState& x, double time) {
    return error_dynamics_rhs(x, u, disturbance.at(time), J);
  };
  const auto advance = [](const BodyErrorState& x, const StateDerivative& k,
                          double h) {
    return BodyErrorState{x.sigma_e + h * k.sigma_e_dot,
                          x.omega_e + h * k.omega_e_dot};
  };

  const StateDerivative k1 = rhs(state, t);
  const StateDerivative k2 = rhs(advance(state, k1, dt / 2.0), t + dt / 2.0);
  const StateDerivative k3 = rhs(advance(state, k2, dt / 2.0), t + dt / 2.0);
  const StateDerivative k4 = rhs(advance(state, k3, dt), t + dt);

  BodyErrorState next;
  next.sigma_e = state.sigma_e + (dt / 6.0) * (k1.sigma_e_dot +
                                               2.0 * k2.sigma_e_dot +
                                               2.0 * k3.sigma_e_dot +
                                               k4.sigma_e_dot);
  next.omega_e = state.omega_e + (dt / 6.0) * (k1.omega_e_dot +
                                               2.0 * k2.omega_e_dot +
                                               2.0 * k3.omega_e_dot +
                                               k4.omega_e_dot);
  if (!all_finite(next.sigma_e) || !all_finite(next.omega_e)) {
    std::ostringstream msg;
    msg << "integrator produced a non-finite state at t = " << t + dt << " s";
    throw NonFiniteState(msg.str());
  }
  return next;
}

} // namespace attsim
