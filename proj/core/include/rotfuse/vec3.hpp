// rotfuse: minimal 3-vector.

#pragma once

#include <cmath>

#include "rotfuse/error.hpp"

namespace rotfuse {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

/// Returns v / |v|; rejects vectors with |v| <= min_norm.
inline Vec3 normalized(const Vec3& v, double min_norm = 1e-15) {
  const double n = norm(v);
  if (n <= min_norm) throw DomainError("normalized: vector norm too small");
  return (1.0 / n) * v;
}

}  // namespace rotfuse
