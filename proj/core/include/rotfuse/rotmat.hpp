// rotfuse: 3x3 rotation matrices.
//
// Row-major storage. R maps body-frame coordinates to global-frame
// coordinates; the columns are the body axes expressed in global
// coordinates, and the bottom row is the global z axis expressed in body
// coordinates.

#pragma once

#include <cmath>

#include "rotfuse/angles.hpp"
#include "rotfuse/vec3.hpp"

namespace rotfuse {

struct RotMat {
  // Row-major entries; defaults to the identity.
  double m[9] = {1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0};

  double operator()(int r, int c) const { return m[3 * r + c]; }
  double& operator()(int r, int c) { return m[3 * r + c]; }

  Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
  Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

  double trace() const { return m[0] + m[4] + m[8]; }

  RotMat transposed() const {
    return {{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
  }

  static RotMat identity() { return {}; }

  static RotMat rot_x(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {{1.0, 0.0, 0.0, 0.0, c, -s, 0.0, s, c}};
  }
  static RotMat rot_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {{c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c}};
  }
  static RotMat rot_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {{c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0}};
  }
};

inline RotMat operator*(const RotMat& a, const RotMat& b) {
  RotMat r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
  return r;
}

inline Vec3 operator*(const RotMat& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

struct RotMatValidation {
  bool ok = false;
  double ortho_residual = 0.0;  // max_ij |(R^T R - I)_ij|
  double det_error = 0.0;       // |det(R) - 1|
};

/// Checks orthonormality and unit determinant against tol.
RotMatValidation validate(const RotMat& r, double tol = kUnitTol);

/// Rejects matrices that fail validate().
void require_valid(const RotMat& r, double tol = kUnitTol);

}  // namespace rotfuse
