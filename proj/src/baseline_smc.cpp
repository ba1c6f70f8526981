#include "attsim/baseline_smc.hpp"

#include <cmath>

#include "attsim/errors.hpp"

namespace attsim {

namespace {
bool all_finite(const Vec3& v) {
  return std::isfinite(v.x()) && std::isfinite(v.y()) && std::isfinite(v.z());
}

Vec3 saturate(const Vec3& x) {
  return x.cwiseMax(-1.0).cwiseMin(1.0);
}
} // namespace

void SmcParams::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw ValidationError("smc.k: must be finite and > 0");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("smc.eps: must be finite and > 0");
  }
  if (!(-lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("smc.lambda: must be finite and < 0");
  }
}

std::pair<Vec3, ControlDiagnostics> smc_control(const BodyErrorState& state,
                                                const SmcParams& params,
                                                const InertiaMatrix& J) {
  const Vec3& sigma = state.sigma_e;
  const Vec3& omega = state.omega_e;
  const double slope = 1.0 / params.lambda; // on-surface omega_e = slope * sigma_e

  ControlDiagnostics diag;
  diag.s = omega - slope * sigma;
  diag.u_eq = omega.cross(J.J() * omega) +
              slope * (J.J() * (mrp_kinematics_matrix(sigma) * omega));
  diag.u_n = -params.k * (J.J() * saturate(diag.s / params.epsilon));

  const Vec3 u = diag.u_eq + diag.u_n;
  if (!all_finite(u)) {
    throw NonFiniteControl("baseline controller produced a non-finite torque");
  }
  return {u, diag};
}

} // namespace attsim
