// rotfuse: uniform random rotations.

#pragma once

#include <cstdint>

#include "rotfuse/quat.hpp"

namespace rotfuse {

/// Canonical double in [0, 1) from a 64-bit generator, 53 bits of mantissa.
template <class URBG>
double canonical_double(URBG& g) {
  static_assert(URBG::min() == 0 && URBG::max() == 0xFFFFFFFFFFFFFFFFull,
                "canonical_double needs a full-range 64-bit generator");
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

/// Box-Muller pair of independent standard normal deviates.
template <class URBG>
void gaussian_pair(URBG& g, double& g0, double& g1) {
  const double u1 = 1.0 - canonical_double(g);  // (0, 1], keeps the log finite
  const double u2 = canonical_double(g);
  const double r = std::sqrt(-2.0 * std::log(u1));
  g0 = r * std::cos(kTwoPi * u2);
  g1 = r * std::sin(kTwoPi * u2);
}

/// Haar-uniform random rotation: a 4D standard normal draw, normalised.
/// Deterministic for a given generator state.
template <class URBG>
Quat random_rotation(URBG& g) {
  while (true) {
    double a, b, c, d;
    gaussian_pair(g, a, b);
    gaussian_pair(g, c, d);
    const double n2 = a * a + b * b + c * c + d * d;
    if (n2 < 1e-24) continue;  // guards the division; practically unreachable
    const double s = 1.0 / std::sqrt(n2);
    return Quat{s * a, s * b, s * c, s * d};
  }
}

}  // namespace rotfuse
