#include "rotfuse/representations.hpp"

#include <cmath>
#include <string>

#include "rotfuse/error.hpp"

namespace rotfuse {

void require_valid(const FusedAngles& f) {
  if (!std::isfinite(f.psi) || !std::isfinite(f.theta) || !std::isfinite(f.phi))
    throw DomainError("fused angles: non-finite component");
  if (f.hemi != 1 && f.hemi != -1)
    throw DomainError("fused angles: hemisphere must be +1 or -1");
  if (std::abs(f.theta) > kHalfPi + kClampTol)
    throw DomainError("fused angles: pitch outside [-pi/2, pi/2]");
  if (std::abs(f.phi) > kHalfPi + kClampTol)
    throw DomainError("fused angles: roll outside [-pi/2, pi/2]");
  const double s = sine_sum(f);
  if (s > 1.0 + kClampTol)
    throw DomainError("sine sum criterion violated: sin^2(theta) + sin^2(phi) = " +
                      std::to_string(s));
}

void require_valid(const TiltAngles& t) {
  if (!std::isfinite(t.psi) || !std::isfinite(t.gamma) || !std::isfinite(t.alpha))
    throw DomainError("tilt angles: non-finite component");
  if (t.alpha < -kClampTol || t.alpha > kPi + kClampTol)
    throw DomainError("tilt angles: alpha outside [0, pi]");
}

}  // namespace rotfuse
