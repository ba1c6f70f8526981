/// attitude_math.hpp — rotation algebra over Modified Rodrigues Parameters.
///
/// The attitude of a rigid body is stored as the three-parameter vector
/// sigma = e * tan(theta/4), where (e, theta) is the rotation axis/angle.
/// The parameterization is singular at theta = 2*pi (tan -> infinity); the
/// controller layer guards that region with a componentwise clamp instead of
/// switching to the shadow set.
///
/// All functions here are pure and thread-safe.
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace attsim {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// 3-2-1 (yaw-pitch-roll) Euler angles, radians. `gimbal_lock` is set when
/// |sin(pitch)| > 1 - 1e-9; the convention then fixes roll = 0 and folds the
/// lost degree of freedom into yaw.
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
  bool gimbal_lock = false;
};

/// Antisymmetric cross-product matrix: skew(x) * y == x.cross(y).
Mat3 skew(const Vec3& x);

/// Attitude kinematics matrix
///   M(x) = ((1 - |x|^2) I + 2 skew(x) + 2 x x^T) / 4,
/// mapping body angular velocity to the attitude-parameter rate
/// sigma_dot = M(sigma) * omega.
Mat3 mrp_kinematics_matrix(const Vec3& sigma);

/// Attitude error between `sigma` and the desired `sigma_d`, as the direct
/// closed-form quotient
///   sigma_e = [(1-|sigma|^2) sigma_d + (1-|sigma_d|^2) sigma
///              + 2 skew(sigma_d) sigma]
///             / [1 + |sigma_d|^2 |sigma|^2 + 2 sigma_d . sigma].
/// This form fixes the initial-condition convention the harness depends on
/// (sigma_e = sigma_d at sigma = 0). Note it does NOT vanish at
/// sigma = sigma_d; use mrp_compose for group-consistent products.
/// Throws DegenerateComposition when the denominator is below 1e-12.
Vec3 mrp_error_paper(const Vec3& sigma, const Vec3& sigma_d);

/// Canonical composition: the rotation `sigma_a` followed by `sigma_b`.
/// Satisfies rotation_matrix(mrp_compose(b, a)) = rotation_matrix(b) *
/// rotation_matrix(a). Throws DegenerateComposition when the combined
/// rotation approaches a full turn (|denominator| < 1e-12).
Vec3 mrp_compose(const Vec3& sigma_b, const Vec3& sigma_a);

/// Inverse rotation: mrp_compose(sigma, mrp_conjugate(sigma)) == 0.
inline Vec3 mrp_conjugate(const Vec3& sigma) { return -sigma; }

/// Direction-cosine matrix of the attitude error
///   R(s) = I + (8 skew(s)^2 - 4 (1 - |s|^2) skew(s)) / (1 + |s|^2)^2,
/// a proper orthogonal matrix for every finite s.
Mat3 rotation_matrix(const Vec3& sigma_e);

/// Rotation angle about the frozen axis `e` (unit vector):
///   theta = 4 * atan(e . sigma_e),  in (-2*pi, 2*pi).
/// Inverts sigma_e = e * tan(theta/4) exactly for theta in (0, 2*pi).
double rotation_angle(const Vec3& sigma_e, const Vec3& e);

/// Rotation axis of the maneuver, frozen from the initial attitude error:
/// e = sigma_e0 / |sigma_e0|. Throws ZeroInitialError when |sigma_e0| <= 1e-9
/// (already at goal; callers must skip control shaping).
Vec3 euler_axis_from_initial(const Vec3& sigma_e0);

/// 3-2-1 Euler angles of rotation_matrix(sigma), for plotting.
EulerAngles mrp_to_euler_angles(const Vec3& sigma);

} // namespace attsim
