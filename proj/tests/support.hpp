// Shared helpers for the rotfuse test suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "rotfuse/rotfuse.hpp"

namespace testsupport {

using namespace rotfuse;

/// Rotation angle between two unit quaternions. The usual 2 acos|<a,b>|
/// cannot resolve distances below ~1e-8 (acos is flat near 1); the chord
/// form 4 asin(|a -/+ b| / 2) keeps full precision down to zero.
inline double rotation_angle_between(const Quat& a, const Quat& b) {
  const Quat d = dot(a, b) >= 0.0 ? Quat{a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}
                                  : Quat{a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  const double chord = std::sqrt(d.w * d.w + d.x * d.x + d.y * d.y + d.z * d.z);
  return 4.0 * std::asin(std::min(1.0, 0.5 * chord));
}

/// |a - b| with both treated as angles, i.e. modulo 2 pi.
inline double wrap_diff(double a, double b) { return std::abs(wrap(a - b)); }

/// Largest componentwise deviation of a from b or from -b, whichever sign
/// matches better.
inline double quat_diff_up_to_sign(const Quat& a, const Quat& b) {
  const Quat c = dot(a, b) >= 0.0 ? b : -b;
  return std::max({std::abs(a.w - c.w), std::abs(a.x - c.x), std::abs(a.y - c.y),
                   std::abs(a.z - c.z)});
}

inline double matrix_diff(const RotMat& a, const RotMat& b) {
  double d = 0.0;
  for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
  return d;
}

inline std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

/// Uniform double in [lo, hi) from the shared generator type.
inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * canonical_double(g);
}

}  // namespace testsupport
