// rotfuse: conversions among quaternions, rotation matrices, tilt angles,
// fused angles, intrinsic ZYX Euler angles and the z-vector forms.
//
// All angle outputs are wrapped to their documented ranges. Conversions
// validate their input and throw DomainError on violations.

#pragma once

#include "rotfuse/quat.hpp"
#include "rotfuse/representations.hpp"
#include "rotfuse/rotmat.hpp"

namespace rotfuse {

// ===== fused yaw =====

/// Fused yaw of a unit quaternion: wrap(2 atan2(z, w)). At the singularity
/// w = z = 0 (alpha = pi) the yaw is undefined and 0 is returned; use
/// fused_yaw_singular or classify_singularity to detect that case.
double fused_yaw(const Quat& q);

/// Fused yaw of a rotation matrix, evaluated from a half-angle arctangent
/// with the branch keyed on the largest of trace and diagonal entries so
/// that every orientation has a well-conditioned path.
double fused_yaw(const RotMat& r);

inline bool fused_yaw_singular(const Quat& q, double tol2 = kYawSingularTol) {
  return q.w * q.w + q.z * q.z < tol2;
}

// ===== pairwise conversions =====

TiltAngles fused_to_tilt(const FusedAngles& f);
FusedAngles tilt_to_fused(const TiltAngles& t);

RotMat tilt_to_rotmat(const TiltAngles& t);
TiltAngles rotmat_to_tilt(const RotMat& r);

RotMat fused_to_rotmat(const FusedAngles& f);
FusedAngles rotmat_to_fused(const RotMat& r);

Quat tilt_to_quat(const TiltAngles& t);
TiltAngles quat_to_tilt(const Quat& q);

Quat fused_to_quat(const FusedAngles& f);
FusedAngles quat_to_fused(const Quat& q);

RotMat quat_to_rotmat(const Quat& q);
Quat rotmat_to_quat(const RotMat& r);

// ===== Euler ZYX =====

/// Intrinsic z-y-x Euler angles: R = Rz(yaw) Ry(pitch) Rx(roll).
struct EulerZYX {
  double yaw = 0.0;    // (-pi, pi]
  double pitch = 0.0;  // [-pi/2, pi/2]
  double roll = 0.0;   // (-pi, pi]
};

Quat euler_zyx_to_quat(const EulerZYX& e);

/// At gimbal lock (|pitch| = pi/2) only yaw -/+ roll is observable; the
/// convention roll = 0 is applied.
EulerZYX quat_to_euler_zyx(const Quat& q);

// ===== z-vector forms =====

/// Global z axis in body coordinates for a rotation with the given fused
/// pitch, roll and hemisphere: (-sin(theta), sin(phi), hemi * cos(alpha)).
Vec3 zvec_from_fused(double theta, double phi, int hemi);

/// Tilt angles of the tilt rotation with the given body-frame z vector;
/// psi = 0 since yaw is unobservable from z alone.
/// pre: |z| = 1 within 1e-6.
TiltAngles tilt_from_zvec(const Vec3& z);

/// Fused angles counterpart of tilt_from_zvec.
FusedAngles fused_from_zvec(const Vec3& z);

/// Attitude from a measured gravity direction (accelerometer convention:
/// the vector is along +z_global in body coordinates when at rest).
/// Rejects accelerations with norm <= 1e-3.
TiltAngles tilt_from_accel(const Vec3& accel);
FusedAngles fused_from_accel(const Vec3& accel);

}  // namespace rotfuse
