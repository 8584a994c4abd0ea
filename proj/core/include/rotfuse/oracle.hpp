// rotfuse: first-principles geometric constructions of the tilt and fused
// parameters, used to cross-check the closed-form conversions.
//
// These functions are deliberately independent of the formulas in
// convert.cpp: they work from rotated frame axes, explicit axis-angle
// rotations and angles measured between vectors.

#pragma once

#include "rotfuse/representations.hpp"
#include "rotfuse/rotmat.hpp"
#include "rotfuse/vec3.hpp"

namespace rotfuse {

/// Rodrigues rotation of v about the unit axis by angle.
Vec3 rotate_about_axis(const Vec3& v, const Vec3& axis_unit, double angle);

/// Tilt angles recovered constructively:
///  - alpha is the angle between the global and body z axes;
///  - the tilt axis is z_global x z_body;
///  - undoing the tilt rotation leaves a pure z rotation whose angle is psi;
///  - gamma is the angle from the de-yawed body x axis to the tilt axis.
/// Throws within pole_tol of alpha = 0 or pi, where the tilt axis is
/// undefined.
TiltAngles geometric_tilt(const RotMat& r, double pole_tol = 1e-6);

/// Fused angles recovered constructively: theta and phi are the signed
/// angles between the body-frame global z axis and its projections onto the
/// yz and xz planes; psi comes from geometric_tilt away from the poles and
/// from the body x axis heading (alpha = 0) or the convention psi = 0
/// (alpha = pi) at them.
FusedAngles geometric_fused(const RotMat& r, double pole_tol = 1e-6);

/// Fused yaw via the tilt-axis-angle route: psi = atan2-of-rotated-frame
/// expression minus gamma away from alpha = 0, and the plain z rotation
/// angle at alpha = 0. An alternative closed form to fused_yaw(RotMat),
/// kept as a cross-check.
double psi_case_formula(const RotMat& r);

}  // namespace rotfuse
