/// support.hpp — shared test utilities: a platform-stable seeded RNG and the
/// independent oracles (Rodrigues rotation, quaternion-based MRP extraction,
/// finite differences) the unit and acceptance tests check against.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "attsim/attitude_math.hpp"

namespace attsim::test {

/// Deterministic uniform sampler. std::uniform_real_distribution is
/// implementation-defined, so frozen expected values use the raw engine with
/// the 53-bit mantissa mapping instead.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform draw in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform draw in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform components in [-1, 1)^3.
  Vec3 vec3(double half_width = 1.0) {
    return Vec3(uniform(-half_width, half_width),
                uniform(-half_width, half_width),
                uniform(-half_width, half_width));
  }

  /// Unit vector (rejection-sampled away from the origin).
  Vec3 unit_vec3() {
    for (;;) {
      const Vec3 v = vec3();
      const double n = v.norm();
      if (n > 0.1) {
        return v / n;
      }
    }
  }

private:
  std::mt19937_64 engine_;
};

/// Direction-cosine matrix of a rotation by `angle` about unit `axis`,
/// written straight from the axis-angle expansion (the independent oracle
/// for rotation_matrix):
///   C = cos(a) I + (1 - cos(a)) e e^T - sin(a) skew(e).
inline Mat3 dcm_from_axis_angle(const Vec3& axis, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return c * Mat3::Identity() + (1.0 - c) * (axis * axis.transpose()) -
         s * skew(axis);
}

/// MRP extraction from a direction-cosine matrix via the most stable
/// quaternion component (the independent oracle for mrp_compose). Returns
/// the principal set (rotation angle <= pi) unless `shadow` is requested.
inline Vec3 mrp_from_dcm(const Mat3& c, bool shadow = false) {
  const double tr = c.trace();
  double q[4]; // scalar-first quaternion of the same DCM convention
  const double t0 = 1.0 + tr;
  const double t1 = 1.0 + 2.0 * c(0, 0) - tr;
  const double t2 = 1.0 + 2.0 * c(1, 1) - tr;
  const double t3 = 1.0 + 2.0 * c(2, 2) - tr;
  if (t0 >= t1 && t0 >= t2 && t0 >= t3) {
    q[0] = 0.5 * std::sqrt(t0);
    q[1] = (c(1, 2) - c(2, 1)) / (4.0 * q[0]);
    q[2] = (c(2, 0) - c(0, 2)) / (4.0 * q[0]);
    q[3] = (c(0, 1) - c(1, 0)) / (4.0 * q[0]);
  } else if (t1 >= t2 && t1 >= t3) {
    q[1] = 0.5 * std::sqrt(t1);
    q[0] = (c(1, 2) - c(2, 1)) / (4.0 * q[1]);
    q[2] = (c(0, 1) + c(1, 0)) / (4.0 * q[1]);
    q[3] = (c(2, 0) + c(0, 2)) / (4.0 * q[1]);
  } else if (t2 >= t3) {
    q[2] = 0.5 * std::sqrt(t2);
    q[0] = (c(2, 0) - c(0, 2)) / (4.0 * q[2]);
    q[1] = (c(0, 1) + c(1, 0)) / (4.0 * q[2]);
    q[3] = (c(1, 2) + c(2, 1)) / (4.0 * q[2]);
  } else {
    q[3] = 0.5 * std::sqrt(t3);
    q[0] = (c(0, 1) - c(1, 0)) / (4.0 * q[3]);
    q[1] = (c(2, 0) + c(0, 2)) / (4.0 * q[3]);
    q[2] = (c(1, 2) + c(2, 1)) / (4.0 * q[3]);
  }
  if (q[0] < 0.0) {
    for (double& qi : q) {
      qi = -qi;
    }
  }
  Vec3 sigma = Vec3(q[1], q[2], q[3]) / (1.0 + q[0]);
  if (shadow) {
    sigma = -sigma / sigma.squaredNorm();
  }
  return sigma;
}

inline void expect_vec_near(const Vec3& actual, const Vec3& expected,
                            double tol) {
  EXPECT_NEAR(actual.x(), expected.x(), tol);
  EXPECT_NEAR(actual.y(), expected.y(), tol);
  EXPECT_NEAR(actual.z(), expected.z(), tol);
}

inline void expect_mat_near(const Mat3& actual, const Mat3& expected,
                            double tol) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      EXPECT_NEAR(actual(r, c), expected(r, c), tol)
          << "entry (" << r << ", " << c << ")";
    }
  }
}

} // namespace attsim::test
