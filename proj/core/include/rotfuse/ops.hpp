// rotfuse: operations on rotations expressed in the fused/tilt
// parameterisations: inverses, yaw extraction and removal, equality up to
// the shared-boundary identifications, singularity classification, rotation
// metrics, interpolation and composition.

#pragma once

#include "rotfuse/convert.hpp"

namespace rotfuse {

// ===== inverses =====

/// Inverse rotation expressed in fused angles, computed in angle space.
FusedAngles fused_inverse(const FusedAngles& f);

/// Inverse rotation expressed in tilt angles:
/// (-psi, wrap(psi + gamma - pi), alpha).
TiltAngles tilt_inverse(const TiltAngles& t);

// ===== yaw split =====

/// Pure fused yaw factor of q, a rotation about the global z axis.
/// Throws at the fused yaw singularity (w = z = 0).
Quat yaw_quat(const Quat& q);

/// Tilt factor of q: the unique rotation with zero fused yaw such that
/// q = yaw_quat(q) * remove_yaw(q). Throws at the fused yaw singularity.
Quat remove_yaw(const Quat& q);

// ===== canonical form and equality =====

/// Resolves the representation ambiguities: hemi = +1 on the boundary
/// |theta| + |phi| >= pi/2 (where both hemispheres describe the same
/// rotation), and psi = 0 at exact zero tilt with hemi = -1 (the fused yaw
/// singularity, where extraction always reports psi = 0). With tol > 0 the
/// hemisphere identification extends to tuples whose |cos(alpha)| <= tol/2,
/// so flipping hemi moves the rotation by at most ~tol.
FusedAngles standard_form(const FusedAngles& f, double tol = 0.0);

/// True when a and b describe the same rotation within tol, honouring the
/// shared-boundary and zero-tilt identifications.
bool fused_equal(const FusedAngles& a, const FusedAngles& b, double tol);

// ===== singularities =====

struct SingularityClass {
  bool fused_yaw_singular = false;       // alpha = pi: w^2 + z^2 < tol^2
  bool tilt_axis_singular = false;       // alpha = 0 or pi: sin(alpha) < tol
  bool near_fused_yaw_singular = false;  // sqrt(w^2 + z^2) < kYawWarnTol
  double alpha = 0.0;

  bool none() const { return !fused_yaw_singular && !tilt_axis_singular; }
};

SingularityClass classify_singularity(const Quat& q, double tol = 1e-12);

// ===== metrics =====

/// Quaternion dot product evaluated from two tilt angle tuples without
/// forming the quaternions.
double quat_dot_tilt(const TiltAngles& a, const TiltAngles& b);

/// Geodesic (angular) distance on SO(3): 2 acos |<q1, q2>|, in [0, pi].
double metric_dR(const Quat& a, const Quat& b);
double metric_dR(const TiltAngles& a, const TiltAngles& b);
double metric_dR(const FusedAngles& a, const FusedAngles& b);

/// Linear dissimilarity 1 - |<q1, q2>|, in [0, 1].
double metric_dL(const Quat& a, const Quat& b);
double metric_dL(const TiltAngles& a, const TiltAngles& b);
double metric_dL(const FusedAngles& a, const FusedAngles& b);

enum class MetricKind { riemannian_dR, linear_dL };

struct MetricValue {
  MetricKind kind = MetricKind::riemannian_dR;
  double value = 0.0;  // radians in [0, pi] for d_R, dimensionless [0, 1] for d_L
};

MetricValue metric(MetricKind kind, const Quat& a, const Quat& b);

// ===== interpolation =====

/// Spherical linear interpolation along the shorter arc, t in [0, 1]; falls
/// back to normalised lerp when the endpoints are nearly aligned. For
/// antipodal rotations (180 degrees apart) the arc is not unique; a
/// deterministic choice is made and *antipodal is set when provided.
Quat slerp(const Quat& a, const Quat& b, double t, bool* antipodal = nullptr);

/// Componentwise interpolation in fused angle space. Only defined when both
/// tuples lie in the positive hemisphere, where the valid region is convex;
/// throws otherwise.
FusedAngles fused_lerp(const FusedAngles& a, const FusedAngles& b, double t);

// ===== composition =====

Quat compose(const Quat& a, const Quat& b);
RotMat compose(const RotMat& a, const RotMat& b);
FusedAngles compose(const FusedAngles& a, const FusedAngles& b);
TiltAngles compose(const TiltAngles& a, const TiltAngles& b);

}  // namespace rotfuse
