// rotfuse: quaternions and the axis-angle form.
//
// Quaternions are Hamilton convention, scalar first: q = (w, x, y, z).
// A unit quaternion rotates body-frame coordinates into global-frame
// coordinates; q and -q describe the same rotation.

#pragma once

#include <cmath>

#include "rotfuse/angles.hpp"
#include "rotfuse/error.hpp"
#include "rotfuse/vec3.hpp"

namespace rotfuse {

struct Quat {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quat identity() { return {}; }

  /// Rotation by angle about the x axis.
  static Quat rot_x(double angle) {
    return {std::cos(0.5 * angle), std::sin(0.5 * angle), 0.0, 0.0};
  }
  static Quat rot_y(double angle) {
    return {std::cos(0.5 * angle), 0.0, std::sin(0.5 * angle), 0.0};
  }
  static Quat rot_z(double angle) {
    return {std::cos(0.5 * angle), 0.0, 0.0, std::sin(0.5 * angle)};
  }

  Quat conjugate() const { return {w, -x, -y, -z}; }

  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  /// Returns q / |q|; rejects quaternions with |q|^2 < 1e-24.
  Quat normalized() const {
    const double n2 = norm2();
    if (n2 < 1e-24) throw DomainError("normalized: quaternion norm too small");
    const double s = 1.0 / std::sqrt(n2);
    return {s * w, s * x, s * y, s * z};
  }

  /// Rotates body-frame coordinates into the global frame.
  Vec3 rotate(const Vec3& v) const {
    const Vec3 qv{x, y, z};
    const Vec3 t = 2.0 * cross(qv, v);
    return v + w * t + cross(qv, t);
  }
};

inline double dot(const Quat& a, const Quat& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Quat operator-(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }

/// Hamilton product, renormalised so that chained composition cannot drift
/// away from the unit sphere.
inline Quat operator*(const Quat& a, const Quat& b) {
  const Quat p{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
               a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
               a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
               a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  return p.normalized();
}

inline bool is_unit(const Quat& q, double tol = kUnitTol) {
  return std::abs(q.norm2() - 1.0) <= tol;
}

/// Rejects quaternions whose squared norm deviates from 1 by more than tol.
void require_unit(const Quat& q, double tol = kUnitTol);

// ===== axis-angle =====

struct AxisAngle {
  Vec3 axis{0.0, 0.0, 1.0};  // unit vector
  double angle = 0.0;        // radians, [0, pi] when produced by quat_to_axisangle
};

/// pre: |axis| = 1 within 1e-6 (renormalised internally).
Quat axisangle_to_quat(const AxisAngle& aa);

/// Returns angle in [0, pi]. A zero rotation reports axis (0, 0, 1).
AxisAngle quat_to_axisangle(const Quat& q);

}  // namespace rotfuse
