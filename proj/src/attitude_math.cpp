#include "attsim/attitude_math.hpp"

#include <cmath>

#include "attsim/errors.hpp"

namespace attsim {

namespace {
constexpr double kDegenerateDenominator = 1e-12;
constexpr double kZeroInitialNorm = 1e-9;
constexpr double kGimbalLockMargin = 1e-9;
} // namespace

Mat3 skew(const Vec3& x) {
  Mat3 s;
  // clang-format off
  s <<  0.0, -x.z(),  x.y(),
       x.z(),   0.0, -x.x(),
      -x.y(),  x.x(),   0.0;
  // clang-format on
  return s;
}

Mat3 mrp_kinematics_matrix(const Vec3& sigma) {
  const double n2 = sigma.squaredNorm();
  return ((1.0 - n2) * Mat3::Identity() + 2.0 * skew(sigma) +
          2.0 * sigma * sigma.transpose()) /
         4.0;
}

Vec3 mrp_error_paper(const Vec3& sigma, const Vec3& sigma_d) {
  const double ns = sigma.squaredNorm();
  const double nd = sigma_d.squaredNorm();
  const double den = 1.0 + nd * ns + 2.0 * sigma_d.dot(sigma);
  if (std::abs(den) < kDegenerateDenominator) {
    throw DegenerateComposition(
        "attitude-error denominator vanished (attitudes compose to a full turn)");
  }
  const Vec3 num =
      (1.0 - ns) * sigma_d + (1.0 - nd) * sigma + 2.0 * skew(sigma_d) * sigma;
  return num / den;
}

Vec3 mrp_compose(const Vec3& sigma_b, const Vec3& sigma_a) {
  const double na = sigma_a.squaredNorm();
  const double nb = sigma_b.squaredNorm();
  const double den = 1.0 + na * nb - 2.0 * sigma_a.dot(sigma_b);
  if (std::abs(den) < kDegenerateDenominator) {
    throw DegenerateComposition(
        "composition denominator vanished (rotations compose to a full turn)");
  }
  const Vec3 num =
      (1.0 - na) * sigma_b + (1.0 - nb) * sigma_a - 2.0 * sigma_b.cross(sigma_a);
  return num / den;
}

Mat3 rotation_matrix(const Vec3& sigma_e) {
  const double n2 = sigma_e.squaredNorm();
  const Mat3 sx = skew(sigma_e);
  const double scale = (1.0 + n2) * (1.0 + n2);
  return Mat3::Identity() + (8.0 * sx * sx - 4.0 * (1.0 - n2) * sx) / scale;
}

double rotation_angle(const Vec3& sigma_e, const Vec3& e) {
  return 4.0 * std::atan(e.dot(sigma_e));
}

Vec3 euler_axis_from_initial(const Vec3& sigma_e0) {
  const double n = sigma_e0.norm();
  if (n <= kZeroInitialNorm) {
    throw ZeroInitialError("initial attitude error is zero; no rotation axis");
  }
  return sigma_e0 / n;
}

EulerAngles mrp_to_euler_angles(const Vec3& sigma) {
  const Mat3 c = rotation_matrix(sigma);
  EulerAngles out;
  const double sp = -c(0, 2); // sin(pitch)
  if (std::abs(sp) > 1.0 - kGimbalLockMargin) {
    // Pitch at +-pi/2: roll and yaw are degenerate; fix roll = 0 and fold
    // the remaining rotation into yaw.
    out.gimbal_lock = true;
    out.pitch = std::copysign(M_PI / 2.0, sp);
    out.roll = 0.0;
    out.yaw = std::atan2(-c(1, 0), c(1, 1));
  } else {
    out.pitch = std::asin(sp);
    out.roll = std::atan2(c(1, 2), c(2, 2));
    out.yaw = std::atan2(c(0, 1), c(0, 0));
  }
  return out;
}

} // namespace attsim
