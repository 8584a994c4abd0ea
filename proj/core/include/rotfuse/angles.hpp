// rotfuse: angle helpers and shared numeric tolerances.

#pragma once

#include <cmath>
#include <string>

#include "rotfuse/error.hpp"

namespace rotfuse {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

// Accepted deviation of |q|^2 from 1 and of rotation matrix residuals.
inline constexpr double kUnitTol = 1e-9;
// Excess beyond [-1, 1] tolerated for inverse trig arguments before rejection.
inline constexpr double kClampTol = 1e-9;
// w^2 + z^2 below this marks the fused yaw singularity (alpha = pi).
inline constexpr double kYawSingularTol = 1e-24;
// sqrt(w^2 + z^2) below this is close enough to the singularity that the
// fused yaw value is numerically unreliable.
inline constexpr double kYawWarnTol = 1e-6;

/// Wraps an angle to (-pi, pi]. Idempotent: a value already in range is
/// returned unchanged, bit for bit.
inline double wrap(double angle) {
  if (!std::isfinite(angle)) throw DomainError("wrap: angle is not finite");
  double a = std::fmod(angle, kTwoPi);
  if (a > kPi)
    a -= kTwoPi;
  else if (a <= -kPi)
    a += kTwoPi;
  return a;
}

/// Sign with msign(0) = +1. Used wherever a hemisphere must be picked
/// from a possibly-zero component.
inline int msign(double x) { return x >= 0.0 ? 1 : -1; }

/// atan2 with the convention atan2(0, 0) = 0.
inline double safe_atan2(double y, double x) {
  if (x == 0.0 && y == 0.0) return 0.0;
  return std::atan2(y, x);
}

/// Clamps x to [-1, 1]; rejects arguments that exceed the interval by more
/// than kClampTol, since that indicates corrupted input rather than roundoff.
inline double clamp_to_unit(double x, const char* what) {
  if (!(x >= -1.0 - kClampTol && x <= 1.0 + kClampTol))
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) +
                      " outside [-1, 1] beyond tolerance");
  if (x > 1.0) return 1.0;
  if (x < -1.0) return -1.0;
  return x;
}

inline double asin_clamped(double x) { return std::asin(clamp_to_unit(x, "asin")); }
inline double acos_clamped(double x) { return std::acos(clamp_to_unit(x, "acos")); }

// Divide before multiplying: ratios like 90/180 are exact, so round degree
// values land on the nearest double to the corresponding radian multiple of
// pi and convert back to exactly the round number they came from.
inline double deg_to_rad(double deg) { return deg / 180.0 * kPi; }
inline double rad_to_deg(double rad) { return rad / kPi * 180.0; }

}  // namespace rotfuse
