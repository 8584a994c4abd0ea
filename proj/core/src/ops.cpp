#include "rotfuse/ops.hpp"

#include <algorithm>
#include <cmath>

namespace rotfuse {

// ===== inverses =====

FusedAngles fused_inverse(const FusedAngles& f) {
  require_valid(f);
  const double st = std::sin(f.theta), sp = std::sin(f.phi);
  const double sa = std::sqrt(std::min(1.0, st * st + sp * sp));
  // Tilt axis angle of the inverse is gamma' = psi + gamma - pi; expanding
  // sin/cos(gamma') against sin(alpha) gives the new pitch and roll.
  const double b = f.psi + safe_atan2(st, sp);
  FusedAngles inv;
  inv.psi = wrap(-f.psi);
  inv.theta = asin_clamped(-sa * std::sin(b));
  inv.phi = asin_clamped(-sa * std::cos(b));
  inv.hemi = f.hemi;
  return inv;
}

TiltAngles tilt_inverse(const TiltAngles& t) {
  require_valid(t);
  return {wrap(-t.psi), wrap(t.psi + t.gamma - kPi), t.alpha};
}

// ===== yaw split =====

Quat yaw_quat(const Quat& q) {
  require_unit(q);
  const double n2 = q.w * q.w + q.z * q.z;
  if (n2 < kYawSingularTol) throw DomainError("fused yaw singular (alpha = pi)");
  const double s = 1.0 / std::sqrt(n2);
  return {s * q.w, 0.0, 0.0, s * q.z};
}

Quat remove_yaw(const Quat& q) {
  require_unit(q);
  const double n2 = q.w * q.w + q.z * q.z;
  if (n2 < kYawSingularTol) throw DomainError("fused yaw singular (alpha = pi)");
  const double s = 1.0 / std::sqrt(n2);
  // Left-multiply by the conjugate yaw factor; the z component cancels
  // exactly: w*z - z*w = 0.
  return {s * n2, s * (q.w * q.x + q.z * q.y), s * (q.w * q.y - q.z * q.x), 0.0};
}

// ===== canonical form and equality =====

FusedAngles standard_form(const FusedAngles& f, double tol) {
  require_valid(f);
  tol = std::max(tol, 0.0);
  FusedAngles s = f;
  s.psi = wrap(s.psi);

  // On the hemisphere boundary |theta| + |phi| = pi/2 both hemispheres name
  // the same rotation; pick +1. With tol > 0 the identification extends to
  // near-boundary tuples with |cos(alpha)| <= tol/2, so the flip moves the
  // rotation by at most ~tol.
  const double radicand =
      std::max(0.0, std::cos(s.theta + s.phi) * std::cos(s.theta - s.phi));
  if (std::abs(s.theta) + std::abs(s.phi) >= kHalfPi || std::sqrt(radicand) <= 0.5 * tol)
    s.hemi = 1;

  // theta = phi = 0 with hemi = -1 is the fused yaw singularity (alpha =
  // pi): yaw is unobservable there and extraction always reports psi = 0,
  // so canonicalise stored tuples the same way. Exact zeros only: away from
  // them psi is observable and distinct values are distinct rotations.
  if (s.hemi == -1 && s.theta == 0.0 && s.phi == 0.0) s.psi = 0.0;
  return s;
}

bool fused_equal(const FusedAngles& a, const FusedAngles& b, double tol) {
  const FusedAngles sa = standard_form(a, tol);
  const FusedAngles sb = standard_form(b, tol);
  return sa.hemi == sb.hemi && std::abs(wrap(sa.psi - sb.psi)) <= tol &&
         std::abs(sa.theta - sb.theta) <= tol && std::abs(sa.phi - sb.phi) <= tol;
}

// ===== singularities =====

SingularityClass classify_singularity(const Quat& q, double tol) {
  require_unit(q);
  SingularityClass c;
  const double yaw2 = q.w * q.w + q.z * q.z;   // cos^2(alpha/2)
  const double tilt2 = q.x * q.x + q.y * q.y;  // sin^2(alpha/2)
  c.alpha = acos_clamped(2.0 * yaw2 - 1.0);
  c.fused_yaw_singular = yaw2 < tol * tol;
  c.tilt_axis_singular = 2.0 * std::sqrt(yaw2 * tilt2) < tol;  // sin(alpha)
  c.near_fused_yaw_singular = yaw2 < kYawWarnTol * kYawWarnTol;
  return c;
}

// ===== metrics =====

double quat_dot_tilt(const TiltAngles& a, const TiltAngles& b) {
  require_valid(a);
  require_valid(b);
  const double ha = 0.5 * a.alpha, hb = 0.5 * b.alpha;
  const double dpsi = 0.5 * (a.psi - b.psi);
  return std::cos(ha) * std::cos(hb) * std::cos(dpsi) +
         std::sin(ha) * std::sin(hb) * std::cos(dpsi + a.gamma - b.gamma);
}

namespace {

double abs_dot_clamped(double d) { return std::min(1.0, std::abs(d)); }

}  // namespace

double metric_dR(const Quat& a, const Quat& b) {
  require_unit(a);
  require_unit(b);
  return 2.0 * std::acos(abs_dot_clamped(dot(a, b)));
}

double metric_dR(const TiltAngles& a, const TiltAngles& b) {
  return 2.0 * std::acos(abs_dot_clamped(quat_dot_tilt(a, b)));
}

double metric_dR(const FusedAngles& a, const FusedAngles& b) {
  return metric_dR(fused_to_tilt(a), fused_to_tilt(b));
}

double metric_dL(const Quat& a, const Quat& b) {
  require_unit(a);
  require_unit(b);
  return 1.0 - abs_dot_clamped(dot(a, b));
}

double metric_dL(const TiltAngles& a, const TiltAngles& b) {
  return 1.0 - abs_dot_clamped(quat_dot_tilt(a, b));
}

double metric_dL(const FusedAngles& a, const FusedAngles& b) {
  return metric_dL(fused_to_tilt(a), fused_to_tilt(b));
}

MetricValue metric(MetricKind kind, const Quat& a, const Quat& b) {
  return {kind, kind == MetricKind::riemannian_dR ? metric_dR(a, b) : metric_dL(a, b)};
}

// ===== interpolation =====

Quat slerp(const Quat& a, const Quat& b, double t, bool* antipodal) {
  require_unit(a);
  require_unit(b);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("slerp: t outside [0, 1]");

  // Interpolate along the shorter arc: flip b into a's half-space.
  double d = dot(a, b);
  Quat bb = b;
  if (d < 0.0) {
    bb = -b;
    d = -d;
  }
  const bool anti = d < 1e-12;
  if (antipodal) *antipodal = anti;
  if (anti && d == 0.0) {
    // The two arcs are equally short; fix the sign of b deterministically.
    const double lead = bb.w != 0.0 ? bb.w : (bb.x != 0.0 ? bb.x : (bb.y != 0.0 ? bb.y : bb.z));
    if (lead < 0.0) bb = -bb;
  }

  const Quat perp{bb.w - d * a.w, bb.x - d * a.x, bb.y - d * a.y, bb.z - d * a.z};
  const double pn = perp.norm();
  if (pn < 1e-12) {
    // Endpoints nearly coincide; normalised lerp is exact to first order.
    const double u = 1.0 - t;
    return Quat{u * a.w + t * bb.w, u * a.x + t * bb.x, u * a.y + t * bb.y,
                u * a.z + t * bb.z}
        .normalized();
  }
  const double omega = std::atan2(pn, d);
  const double so = std::sin(omega);
  const double ka = std::sin((1.0 - t) * omega) / so;
  const double kb = std::sin(t * omega) / so;
  return Quat{ka * a.w + kb * bb.w, ka * a.x + kb * bb.x, ka * a.y + kb * bb.y,
              ka * a.z + kb * bb.z}
      .normalized();
}

FusedAngles fused_lerp(const FusedAngles& a, const FusedAngles& b, double t) {
  require_valid(a);
  require_valid(b);
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("fused_lerp: t outside [0, 1]");
  if (a.hemi != 1 || b.hemi != 1)
    throw DomainError("fused_lerp: endpoints must both lie in the positive hemisphere");
  // The valid (theta, phi) region |theta| + |phi| <= pi/2 is convex, so the
  // segment between two valid positive-hemisphere tuples stays valid.
  FusedAngles r;
  r.psi = wrap(a.psi + t * wrap(b.psi - a.psi));
  r.theta = a.theta + t * (b.theta - a.theta);
  r.phi = a.phi + t * (b.phi - a.phi);
  r.hemi = 1;
  return r;
}

// ===== composition =====

Quat compose(const Quat& a, const Quat& b) {
  require_unit(a);
  require_unit(b);
  return a * b;
}

RotMat compose(const RotMat& a, const RotMat& b) {
  require_valid(a);
  require_valid(b);
  return a * b;
}

FusedAngles compose(const FusedAngles& a, const FusedAngles& b) {
  return quat_to_fused(fused_to_quat(a) * fused_to_quat(b));
}

TiltAngles compose(const TiltAngles& a, const TiltAngles& b) {
  return quat_to_tilt(tilt_to_quat(a) * tilt_to_quat(b));
}

}  // namespace rotfuse
