// Core type tests: angle helpers, quaternions, rotation matrices,
// axis-angle, parameter validation and the random sampler.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace rotfuse;
using namespace testsupport;

TEST_CASE("wrap maps into (-pi, pi] with the boundary at +pi") {
  CHECK(wrap(0.0) == 0.0);
  CHECK(wrap(kPi) == kPi);
  CHECK(wrap(-kPi) == kPi);
  CHECK(wrap(1.5 * kPi) == doctest::Approx(-0.5 * kPi).epsilon(1e-15));
  CHECK(wrap(-1.5 * kPi) == doctest::Approx(0.5 * kPi).epsilon(1e-15));
  CHECK(std::abs(wrap(kTwoPi)) < 1e-15);
  CHECK(wrap(7.0) == doctest::Approx(7.0 - kTwoPi).epsilon(1e-15));
}

TEST_CASE("wrap is exactly idempotent") {
  for (int i = 0; i <= 1000; ++i) {
    const double x = -10.0 + 0.02 * i;
    const double w = wrap(x);
    CHECK(wrap(w) == w);  // bit-exact
    CHECK(w > -kPi);
    CHECK(w <= kPi);
  }
}

TEST_CASE("wrap rejects non-finite input") {
  CHECK_THROWS_AS(wrap(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(wrap(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("msign treats both zeros as positive") {
  CHECK(msign(0.0) == 1);
  CHECK(msign(-0.0) == 1);
  CHECK(msign(5.0) == 1);
  CHECK(msign(-1e-300) == -1);
}

TEST_CASE("safe_atan2 returns 0 at the origin") {
  CHECK(safe_atan2(0.0, 0.0) == 0.0);
  CHECK(safe_atan2(0.0, -0.0) == 0.0);  // plain atan2 would give pi
  CHECK(safe_atan2(-0.0, -0.0) == 0.0);
  CHECK(safe_atan2(1.0, 1.0) == doctest::Approx(0.25 * kPi));
}

TEST_CASE("inverse trig clamps roundoff but rejects bad input") {
  CHECK(asin_clamped(1.0 + 5e-10) == 0.5 * kPi);
  CHECK(acos_clamped(-1.0 - 5e-10) == kPi);
  CHECK_THROWS_AS(asin_clamped(1.0 + 2e-9), DomainError);
  CHECK_THROWS_AS(acos_clamped(-1.1), DomainError);
  CHECK_THROWS_AS(asin_clamped(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("quaternion product matches a hand-computed composition") {
  const Quat q = Quat::rot_z(0.5 * kPi) * Quat::rot_x(0.5 * kPi);
  CHECK(q.w == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.y == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(q.z == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("q times its conjugate is the identity") {
  auto rng = seeded_rng(11);
  for (int i = 0; i < 200; ++i) {
    const Quat q = random_rotation(rng);
    const Quat p = q * q.conjugate();
    CHECK(std::abs(p.w - 1.0) < 1e-12);
    CHECK(std::abs(p.x) < 1e-12);
    CHECK(std::abs(p.y) < 1e-12);
    CHECK(std::abs(p.z) < 1e-12);
  }
}

TEST_CASE("quaternion rotation is an isometry and matches a known case") {
  const Vec3 v = Quat::rot_z(0.5 * kPi).rotate({1.0, 0.0, 0.0});
  CHECK(v.x == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(v.y == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.z == 0.0);

  auto rng = seeded_rng(12);
  for (int i = 0; i < 200; ++i) {
    const Quat q = random_rotation(rng);
    const Vec3 a{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    const Vec3 b{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    CHECK(norm(q.rotate(a)) == doctest::Approx(norm(a)).epsilon(1e-12));
    CHECK(dot(q.rotate(a), q.rotate(b)) == doctest::Approx(dot(a, b)).epsilon(1e-10));
  }
}

TEST_CASE("require_unit tolerance boundary") {
  CHECK_NOTHROW(require_unit(Quat{1.0, 1e-6, 0.0, 0.0}));  // |q|^2 = 1 + 1e-12
  CHECK_THROWS_AS(require_unit(Quat{1.001, 0.0, 0.0, 0.0}), DomainError);
  CHECK_THROWS_AS(require_unit(Quat{0.0, 0.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("rotation matrix factories compose like angles add") {
  const RotMat a = RotMat::rot_z(0.7) * RotMat::rot_z(0.4);
  CHECK(matrix_diff(a, RotMat::rot_z(1.1)) < 1e-15);
  const RotMat b = RotMat::rot_x(0.3) * RotMat::rot_x(-0.3);
  CHECK(matrix_diff(b, RotMat::identity()) < 1e-15);
}

TEST_CASE("matrix validation catches small orthogonality defects") {
  CHECK(validate(RotMat::identity()).ok);
  CHECK(validate(RotMat::rot_y(1.234)).ortho_residual < 1e-15);

  RotMat r = RotMat::rot_z(0.5);
  r(0, 0) += 2e-9;
  CHECK_FALSE(validate(r).ok);
  CHECK_THROWS_AS(require_valid(r), DomainError);

  RotMat reflect;  // det = -1, orthonormal
  reflect(2, 2) = -1.0;
  const auto v = validate(reflect);
  CHECK(v.ortho_residual < 1e-15);
  CHECK(v.det_error == doctest::Approx(2.0));
  CHECK_FALSE(v.ok);
}

TEST_CASE("axis-angle round trip preserves axis times angle") {
  const Quat qz = axisangle_to_quat({{0.0, 0.0, 1.0}, 0.5 * kPi});
  CHECK(quat_diff_up_to_sign(qz, Quat::rot_z(0.5 * kPi)) < 1e-15);

  auto rng = seeded_rng(13);
  for (int i = 0; i < 300; ++i) {
    const Vec3 u = normalized(
        {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)}, 1e-2);
    const double angle = uniform(rng, -3.1, 3.1);
    const AxisAngle back = quat_to_axisangle(axisangle_to_quat({u, angle}));
    CHECK(back.angle >= 0.0);
    CHECK(back.angle <= kPi + 1e-15);
    CHECK(std::abs(back.axis.x * back.angle - u.x * angle) < 1e-12);
    CHECK(std::abs(back.axis.y * back.angle - u.y * angle) < 1e-12);
    CHECK(std::abs(back.axis.z * back.angle - u.z * angle) < 1e-12);
  }
}

TEST_CASE("axis-angle rejects non-unit axis, zero angle reports +z") {
  CHECK_THROWS_AS(axisangle_to_quat({{1.0, 1.0, 1.0}, 0.3}), DomainError);
  const AxisAngle aa = quat_to_axisangle(Quat::identity());
  CHECK(aa.angle == 0.0);
  CHECK(aa.axis.z == 1.0);
}

TEST_CASE("fused validation enforces ranges and the sine sum criterion") {
  CHECK_NOTHROW(require_valid(FusedAngles{0.2, 0.3, -0.4, -1}));
  CHECK_THROWS_AS(require_valid(FusedAngles{0.0, 2.0, 0.0, 1}), DomainError);
  CHECK_THROWS_AS(require_valid(FusedAngles{0.0, 0.3, 0.3, 0}), DomainError);

  try {
    require_valid(FusedAngles{0.0, 1.0, 0.8, 1});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("sine sum criterion violated") != std::string::npos);
  }
}

TEST_CASE("sine sum criterion is equivalent to the angle-sum bound") {
  // Equivalence |theta| + |phi| <= pi/2  <=>  sin^2 + sin^2 <= 1, checked
  // away from the boundary where floating point could flip either side.
  for (double theta = -1.5; theta <= 1.5; theta += 0.1) {
    for (double phi = -1.5; phi <= 1.5; phi += 0.1) {
      const double margin = std::abs(theta) + std::abs(phi) - kHalfPi;
      if (std::abs(margin) < 1e-6) continue;
      const double s = std::sin(theta) * std::sin(theta) + std::sin(phi) * std::sin(phi);
      CHECK((margin < 0.0) == (s < 1.0));
    }
  }
}

TEST_CASE("tilt validation bounds alpha") {
  CHECK_NOTHROW(require_valid(TiltAngles{0.0, 0.0, kPi + 1e-10}));
  CHECK_THROWS_AS(require_valid(TiltAngles{0.0, 0.0, 3.2}), DomainError);
  CHECK_THROWS_AS(require_valid(TiltAngles{0.0, 0.0, -0.1}), DomainError);
}

TEST_CASE("random rotations are unit, deterministic per seed") {
  auto g1 = seeded_rng(42);
  auto g2 = seeded_rng(42);
  auto g3 = seeded_rng(43);
  bool any_different = false;
  for (int i = 0; i < 100; ++i) {
    const Quat a = random_rotation(g1);
    const Quat b = random_rotation(g2);
    const Quat c = random_rotation(g3);
    CHECK(std::abs(a.norm2() - 1.0) < 1e-12);
    CHECK(a.w == b.w);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.z == b.z);
    if (a.w != c.w) any_different = true;
  }
  CHECK(any_different);
}
