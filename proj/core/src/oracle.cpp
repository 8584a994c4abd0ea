#include "rotfuse/oracle.hpp"

#include <cmath>

#include "rotfuse/angles.hpp"
#include "rotfuse/error.hpp"

namespace rotfuse {

Vec3 rotate_about_axis(const Vec3& v, const Vec3& u, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return c * v + s * cross(u, v) + ((1.0 - c) * dot(u, v)) * u;
}

namespace {

/// Unsigned angle between two nonzero vectors, in [0, pi].
double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

}  // namespace

TiltAngles geometric_tilt(const RotMat& r, double pole_tol) {
  require_valid(r);
  const Vec3 z_global{0.0, 0.0, 1.0};
  const Vec3 z_body = r.col(2);  // body z axis in global coordinates
  const double alpha = acos_clamped(dot(z_global, z_body));
  if (alpha < pole_tol || alpha > kPi - pole_tol)
    throw DomainError("geometric tilt: tilt axis undefined near alpha = 0 or pi");

  // The tilt rotation turns z_global onto z_body about their common normal.
  const Vec3 axis = normalized(cross(z_global, z_body));

  // Undo the tilt; what remains of the body x axis is the pure yaw heading.
  const Vec3 x_body = r.col(0);
  const Vec3 x_deyawed = rotate_about_axis(x_body, axis, -alpha);
  const double psi = wrap(std::atan2(x_deyawed.y, x_deyawed.x));

  // gamma is the angle from the de-yawed body x axis to the tilt axis,
  // measured about the global z axis.
  const double gamma = wrap(std::atan2(cross(x_deyawed, axis).z, dot(x_deyawed, axis)));
  return {psi, gamma, alpha};
}

FusedAngles geometric_fused(const RotMat& r, double pole_tol) {
  require_valid(r);
  const Vec3 zg = r.row(2);  // global z axis in body coordinates

  // Fused pitch: signed angle between zg and its projection onto the body
  // yz plane. The projection degenerates when zg is along the body x axis,
  // where the pitch saturates at -/+ pi/2.
  const Vec3 proj_x{0.0, zg.y, zg.z};
  double theta;
  if (norm(proj_x) < 1e-15)
    theta = zg.x > 0.0 ? -kHalfPi : kHalfPi;
  else
    theta = (zg.x > 0.0 ? -1.0 : 1.0) * angle_between(zg, proj_x);

  // Fused roll: likewise against the body xz plane.
  const Vec3 proj_y{zg.x, 0.0, zg.z};
  double phi;
  if (norm(proj_y) < 1e-15)
    phi = zg.y >= 0.0 ? kHalfPi : -kHalfPi;
  else
    phi = (zg.y >= 0.0 ? 1.0 : -1.0) * angle_between(zg, proj_y);

  FusedAngles f;
  f.theta = theta;
  f.phi = phi;
  f.hemi = msign(zg.z);

  const double alpha = acos_clamped(zg.z);
  if (alpha < pole_tol) {
    // Pure yaw: the heading of the body x axis.
    f.psi = wrap(std::atan2(r(1, 0), r(0, 0)));
  } else if (alpha > kPi - pole_tol) {
    f.psi = 0.0;  // fused yaw is unobservable at alpha = pi
  } else {
    f.psi = geometric_tilt(r, pole_tol).psi;
  }
  return f;
}

double psi_case_formula(const RotMat& r) {
  require_valid(r);
  if (r(2, 0) == 0.0 && r(2, 1) == 0.0 && r(2, 2) > 0.0)
    return wrap(safe_atan2(r(1, 0), r(0, 0)));
  const double gamma = safe_atan2(-r(2, 0), r(2, 1));
  return wrap(safe_atan2(r(0, 2), -r(1, 2)) - gamma);
}

}  // namespace rotfuse
