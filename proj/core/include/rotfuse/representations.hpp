// rotfuse: the tilt angles and fused angles parameterisations.
//
// Both split a rotation into a fused yaw about the global z axis and a tilt
// component, the unique rotation without fused yaw that moves the global z
// axis onto the body z axis.
//
// Tilt angles (psi, gamma, alpha): fused yaw, tilt axis angle, tilt angle.
// Fused angles (psi, theta, phi, hemi): fused yaw, fused pitch, fused roll,
// hemisphere (+1 when alpha <= pi/2, -1 otherwise).

#pragma once

#include "rotfuse/angles.hpp"

namespace rotfuse {

struct TiltAngles {
  double psi = 0.0;    // fused yaw, (-pi, pi]
  double gamma = 0.0;  // tilt axis angle, (-pi, pi]
  double alpha = 0.0;  // tilt angle, [0, pi]
};

struct FusedAngles {
  double psi = 0.0;    // fused yaw, (-pi, pi]
  double theta = 0.0;  // fused pitch, [-pi/2, pi/2]
  double phi = 0.0;    // fused roll, [-pi/2, pi/2]
  int hemi = 1;        // +1 or -1
};

/// sin^2(theta) + sin^2(phi); must not exceed 1 for a valid tuple
/// (equivalently |theta| + |phi| <= pi/2).
inline double sine_sum(const FusedAngles& f) {
  const double st = std::sin(f.theta), sp = std::sin(f.phi);
  return st * st + sp * sp;
}

/// Checks angle ranges, hemi in {-1, +1} and the sine sum criterion; a sine
/// sum up to 1 + kClampTol is accepted and treated as the boundary.
void require_valid(const FusedAngles& f);

/// Checks finiteness and alpha in [0, pi] (within kClampTol).
void require_valid(const TiltAngles& t);

}  // namespace rotfuse
