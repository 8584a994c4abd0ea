#include "rotfuse/convert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rotfuse {

namespace {

// cos(alpha) magnitude squared from fused pitch and roll. The product form
// cos(theta + phi) cos(theta - phi) equals 1 - sin^2(theta) - sin^2(phi)
// and avoids cancellation near the hemisphere boundary. Tuples that
// overshoot the boundary by roundoff yield a slightly negative value, which
// is projected back to 0.
double cos_alpha_sq(double theta, double phi) {
  return std::max(0.0, std::cos(theta + phi) * std::cos(theta - phi));
}

}  // namespace

// ===== fused yaw =====

double fused_yaw(const Quat& q) {
  require_unit(q);
  return wrap(2.0 * safe_atan2(q.z, q.w));
}

double fused_yaw(const RotMat& r) {
  require_valid(r);
  const double t = r.trace();
  double half;
  if (t >= 0.0) {
    half = safe_atan2(r(1, 0) - r(0, 1), 1.0 + t);
  } else {
    // Trace is negative: pick the branch keyed on the largest diagonal
    // entry, which keeps both atan2 arguments away from simultaneous zero.
    const double m = std::max({r(0, 0), r(1, 1), r(2, 2)});
    if (m == r(2, 2))
      half = safe_atan2(1.0 - r(0, 0) - r(1, 1) + r(2, 2), r(1, 0) - r(0, 1));
    else if (m == r(1, 1))
      half = safe_atan2(r(2, 1) + r(1, 2), r(0, 2) - r(2, 0));
    else
      half = safe_atan2(r(0, 2) + r(2, 0), r(2, 1) - r(1, 2));
  }
  return wrap(2.0 * half);
}

// ===== fused <-> tilt =====

TiltAngles fused_to_tilt(const FusedAngles& f) {
  require_valid(f);
  const double st = std::sin(f.theta), sp = std::sin(f.phi);
  const double gamma = safe_atan2(st, sp);
  const double ca = f.hemi * std::sqrt(cos_alpha_sq(f.theta, f.phi));
  return {wrap(f.psi), gamma, safe_atan2(std::hypot(st, sp), ca)};
}

FusedAngles tilt_to_fused(const TiltAngles& t) {
  require_valid(t);
  const double sa = std::sin(t.alpha), ca = std::cos(t.alpha);
  const double sg = std::sin(t.gamma), cg = std::cos(t.gamma);
  FusedAngles f;
  f.psi = wrap(t.psi);
  // atan2 against the complementary cosine instead of asin: the pair keeps
  // unit norm, so the angles stay fully conditioned at the -/+ pi/2 rim.
  f.theta = safe_atan2(sa * sg, std::hypot(ca, sa * cg));
  f.phi = safe_atan2(sa * cg, std::hypot(ca, sa * sg));
  f.hemi = t.alpha <= kHalfPi ? 1 : -1;
  return f;
}

// ===== tilt <-> rotation matrix =====

RotMat tilt_to_rotmat(const TiltAngles& t) {
  require_valid(t);
  const double cg = std::cos(t.gamma), sg = std::sin(t.gamma);
  const double ca = std::cos(t.alpha), sa = std::sin(t.alpha);
  const double beta = t.psi + t.gamma;
  const double cb = std::cos(beta), sb = std::sin(beta);
  RotMat r;
  r(0, 0) = cg * cb + ca * sg * sb;
  r(0, 1) = sg * cb - ca * cg * sb;
  r(0, 2) = sa * sb;
  r(1, 0) = cg * sb - ca * sg * cb;
  r(1, 1) = sg * sb + ca * cg * cb;
  r(1, 2) = -sa * cb;
  r(2, 0) = -sa * sg;
  r(2, 1) = sa * cg;
  r(2, 2) = ca;
  return r;
}

TiltAngles rotmat_to_tilt(const RotMat& r) {
  require_valid(r);
  return {fused_yaw(r), safe_atan2(-r(2, 0), r(2, 1)),
          safe_atan2(std::hypot(r(2, 0), r(2, 1)), r(2, 2))};
}

// ===== fused <-> rotation matrix =====

RotMat fused_to_rotmat(const FusedAngles& f) {
  RotMat r = tilt_to_rotmat(fused_to_tilt(f));
  // The bottom row has an exact expression in the fused parameters; assign
  // it directly so it round-trips cleanly.
  r(2, 0) = -std::sin(f.theta);
  r(2, 1) = std::sin(f.phi);
  r(2, 2) = f.hemi * std::sqrt(cos_alpha_sq(f.theta, f.phi));
  return r;
}

FusedAngles rotmat_to_fused(const RotMat& r) {
  require_valid(r);
  // The bottom row is unit length, so each sine pairs with a computable
  // cosine magnitude; atan2 on the pair avoids the asin precision cliff.
  FusedAngles f;
  f.psi = fused_yaw(r);
  f.theta = safe_atan2(-r(2, 0), std::hypot(r(2, 1), r(2, 2)));
  f.phi = safe_atan2(r(2, 1), std::hypot(r(2, 0), r(2, 2)));
  f.hemi = msign(r(2, 2));
  return f;
}

// ===== tilt <-> quaternion =====

Quat tilt_to_quat(const TiltAngles& t) {
  require_valid(t);
  const double hp = 0.5 * t.psi, ha = 0.5 * t.alpha;
  const double cha = std::cos(ha), sha = std::sin(ha);
  const Quat q{cha * std::cos(hp), sha * std::cos(hp + t.gamma),
               sha * std::sin(hp + t.gamma), cha * std::sin(hp)};
  return q.normalized();
}

TiltAngles quat_to_tilt(const Quat& q) {
  require_unit(q);
  TiltAngles t;
  t.psi = wrap(2.0 * safe_atan2(q.z, q.w));
  t.gamma = safe_atan2(q.w * q.y - q.x * q.z, q.w * q.x + q.y * q.z);
  t.alpha = 2.0 * safe_atan2(std::hypot(q.x, q.y), std::hypot(q.w, q.z));
  return t;
}

// ===== fused <-> quaternion =====

Quat fused_to_quat(const FusedAngles& f) {
  require_valid(f);
  const double st = std::sin(f.theta), sp = std::sin(f.phi);
  const double ca = f.hemi * std::sqrt(cos_alpha_sq(f.theta, f.phi));
  const double sa = std::sqrt(std::min(1.0, st * st + sp * sp));
  const double hp = 0.5 * f.psi;
  const double chp = std::cos(hp), shp = std::sin(hp);
  Quat q;
  if (f.hemi > 0) {
    // Unnormalised tilt half-angle form scaled by 2 cos(alpha/2).
    const double c = 1.0 + ca;
    q = {chp * c, sp * chp - st * shp, sp * shp + st * chp, shp * c};
  } else {
    // Near alpha = pi the previous form degenerates; this one is scaled by
    // 2 sin(alpha/2) instead and stays well conditioned there.
    const double c = 1.0 - ca;
    const double b = hp + safe_atan2(st, sp);
    q = {sa * chp, c * std::cos(b), c * std::sin(b), sa * shp};
  }
  return q.normalized();
}

FusedAngles quat_to_fused(const Quat& q) {
  require_unit(q);
  // Bottom-row entries of the matrix form, assembled directly from the
  // quaternion. Pairing each sine with the complementary cosine magnitude
  // keeps theta and phi accurate right up to the -/+ pi/2 rim, where plain
  // asin loses half the significant digits.
  const double zx = 2.0 * (q.x * q.z - q.w * q.y);
  const double zy = 2.0 * (q.y * q.z + q.w * q.x);
  const double zz = q.w * q.w - q.x * q.x - q.y * q.y + q.z * q.z;
  FusedAngles f;
  f.psi = wrap(2.0 * safe_atan2(q.z, q.w));
  f.theta = safe_atan2(-zx, std::hypot(zy, zz));
  f.phi = safe_atan2(zy, std::hypot(zx, zz));
  f.hemi = msign(q.w * q.w + q.z * q.z - 0.5);
  return f;
}

// ===== quaternion <-> rotation matrix =====

RotMat quat_to_rotmat(const Quat& q) {
  require_unit(q);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  RotMat r;
  r(0, 0) = w * w + x * x - y * y - z * z;
  r(0, 1) = 2.0 * (x * y - w * z);
  r(0, 2) = 2.0 * (x * z + w * y);
  r(1, 0) = 2.0 * (x * y + w * z);
  r(1, 1) = w * w - x * x + y * y - z * z;
  r(1, 2) = 2.0 * (y * z - w * x);
  r(2, 0) = 2.0 * (x * z - w * y);
  r(2, 1) = 2.0 * (y * z + w * x);
  r(2, 2) = w * w - x * x - y * y + z * z;
  return r;
}

Quat rotmat_to_quat(const RotMat& r) {
  require_valid(r);
  // Shepperd's method: branch on the largest of the trace and the diagonal
  // entries so the leading square root is always well conditioned.
  const double t = r.trace();
  Quat q;
  if (t >= r(0, 0) && t >= r(1, 1) && t >= r(2, 2)) {
    const double s = std::sqrt(1.0 + t);
    const double k = 0.5 / s;
    q = {0.5 * s, k * (r(2, 1) - r(1, 2)), k * (r(0, 2) - r(2, 0)),
         k * (r(1, 0) - r(0, 1))};
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    const double k = 0.5 / s;
    q = {k * (r(2, 1) - r(1, 2)), 0.5 * s, k * (r(0, 1) + r(1, 0)),
         k * (r(0, 2) + r(2, 0))};
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = std::sqrt(1.0 - r(0, 0) + r(1, 1) - r(2, 2));
    const double k = 0.5 / s;
    q = {k * (r(0, 2) - r(2, 0)), k * (r(0, 1) + r(1, 0)), 0.5 * s,
         k * (r(1, 2) + r(2, 1))};
  } else {
    const double s = std::sqrt(1.0 - r(0, 0) - r(1, 1) + r(2, 2));
    const double k = 0.5 / s;
    q = {k * (r(1, 0) - r(0, 1)), k * (r(0, 2) + r(2, 0)),
         k * (r(1, 2) + r(2, 1)), 0.5 * s};
  }
  return q.normalized();
}

// ===== Euler ZYX =====

Quat euler_zyx_to_quat(const EulerZYX& e) {
  if (!std::isfinite(e.yaw) || !std::isfinite(e.pitch) || !std::isfinite(e.roll))
    throw DomainError("euler angles: non-finite component");
  return Quat::rot_z(e.yaw) * Quat::rot_y(e.pitch) * Quat::rot_x(e.roll);
}

EulerZYX quat_to_euler_zyx(const Quat& q) {
  require_unit(q);
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  const double sp = 2.0 * (w * y - x * z);  // -R31
  const double cp = std::hypot(w * w + x * x - y * y - z * z, 2.0 * (x * y + w * z));
  EulerZYX e;
  e.pitch = safe_atan2(sp, cp);
  if (cp < 1e-7) {
    // Gimbal lock: only yaw -/+ roll is determined; put it all into yaw.
    e.yaw = wrap(safe_atan2(-2.0 * (x * y - w * z), w * w - x * x + y * y - z * z));
    e.roll = 0.0;
  } else {
    e.yaw = wrap(safe_atan2(2.0 * (x * y + w * z), w * w + x * x - y * y - z * z));
    e.roll = wrap(safe_atan2(2.0 * (y * z + w * x), w * w - x * x - y * y + z * z));
  }
  return e;
}

// ===== z-vector forms =====

Vec3 zvec_from_fused(double theta, double phi, int hemi) {
  require_valid(FusedAngles{0.0, theta, phi, hemi});
  return {-std::sin(theta), std::sin(phi), hemi * std::sqrt(cos_alpha_sq(theta, phi))};
}

namespace {

Vec3 unit_zvec(const Vec3& z) {
  const double n = norm(z);
  if (n < 1e-3) throw DomainError("z-vector: norm too small");
  if (std::abs(n - 1.0) > 1e-6)
    throw DomainError("z-vector: norm deviates from 1 by more than 1e-6");
  return (1.0 / n) * z;
}

}  // namespace

TiltAngles tilt_from_zvec(const Vec3& z) {
  const Vec3 u = unit_zvec(z);
  return {0.0, safe_atan2(-u.x, u.y), safe_atan2(std::hypot(u.x, u.y), u.z)};
}

FusedAngles fused_from_zvec(const Vec3& z) {
  const Vec3 u = unit_zvec(z);
  return {0.0, safe_atan2(-u.x, std::hypot(u.y, u.z)), safe_atan2(u.y, std::hypot(u.x, u.z)),
          msign(u.z)};
}

TiltAngles tilt_from_accel(const Vec3& accel) {
  const double n = norm(accel);
  if (n <= 1e-3) throw DomainError("acceleration norm below threshold");
  return tilt_from_zvec((1.0 / n) * accel);
}

FusedAngles fused_from_accel(const Vec3& accel) {
  const double n = norm(accel);
  if (n <= 1e-3) throw DomainError("acceleration norm below threshold");
  return fused_from_zvec((1.0 / n) * accel);
}

}  // namespace rotfuse
