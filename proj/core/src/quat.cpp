#include "rotfuse/quat.hpp"

#include <string>

namespace rotfuse {

void require_unit(const Quat& q, double tol) {
  const double n2 = q.norm2();
  if (!(std::abs(n2 - 1.0) <= tol))
    throw DomainError("quaternion is not unit: |q|^2 = " + std::to_string(n2));
}

Quat axisangle_to_quat(const AxisAngle& aa) {
  if (!std::isfinite(aa.angle)) throw DomainError("axis-angle: angle is not finite");
  const double n = norm(aa.axis);
  if (!(std::abs(n - 1.0) <= 1e-6))
    throw DomainError("axis-angle: axis norm deviates from 1 by more than 1e-6");
  const Vec3 u = (1.0 / n) * aa.axis;
  const double h = 0.5 * wrap(aa.angle);
  const double s = std::sin(h);
  return Quat{std::cos(h), s * u.x, s * u.y, s * u.z};
}

AxisAngle quat_to_axisangle(const Quat& q) {
  require_unit(q);
  // Fix the sign so the reported angle lands in [0, pi].
  const Quat p = q.w < 0.0 ? -q : q;
  const double vn = std::sqrt(p.x * p.x + p.y * p.y + p.z * p.z);
  const double angle = 2.0 * std::atan2(vn, p.w);
  if (vn < 1e-12) return AxisAngle{{0.0, 0.0, 1.0}, angle};
  const double s = 1.0 / vn;
  return AxisAngle{{s * p.x, s * p.y, s * p.z}, angle};
}

}  // namespace rotfuse
