// Operation tests: inverses, yaw split, standard form and equality,
// singularity classification, metrics, slerp, composition.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "support.hpp"

using namespace rotfuse;
using namespace testsupport;

namespace {
const double kDeg = kPi / 180.0;
}

TEST_CASE("fused_inverse hand-derived values") {
  const FusedAngles a = fused_inverse({0.5 * kPi, 0.0, 0.5 * kPi, 1});
  CHECK(a.psi == doctest::Approx(-0.5 * kPi).epsilon(1e-14));
  CHECK(a.theta == doctest::Approx(-0.5 * kPi).epsilon(1e-14));
  CHECK(std::abs(a.phi) < 1e-15);
  CHECK(a.hemi == 1);

  const FusedAngles b = fused_inverse({0.0, 0.0, 0.0, 1});
  CHECK(b.psi == 0.0);
  CHECK(b.theta == 0.0);
  CHECK(b.phi == 0.0);
}

TEST_CASE("zero-yaw inverses simply negate pitch and roll") {
  auto rng = seeded_rng(31);
  for (int i = 0; i < 500; ++i) {
    FusedAngles f = quat_to_fused(random_rotation(rng));
    f.psi = 0.0;
    const FusedAngles inv = fused_inverse(f);
    CHECK(inv.psi == 0.0);
    CHECK(inv.theta == doctest::Approx(-f.theta).epsilon(1e-11));
    CHECK(inv.phi == doctest::Approx(-f.phi).epsilon(1e-11));
    CHECK(inv.hemi == f.hemi);
  }
}

TEST_CASE("fused and tilt inverses match the quaternion conjugate") {
  auto rng = seeded_rng(32);
  for (int i = 0; i < 2000; ++i) {
    const Quat q = random_rotation(rng);
    const Quat qc = q.conjugate();

    const FusedAngles f = quat_to_fused(q);
    const FusedAngles finv = fused_inverse(f);
    CHECK(rotation_angle_between(fused_to_quat(finv), qc) < 1e-9);
    CHECK(finv.hemi == f.hemi);
    CHECK(wrap_diff(finv.psi, -f.psi) < 1e-12);

    const TiltAngles t = quat_to_tilt(q);
    const TiltAngles tinv = tilt_inverse(t);
    CHECK(tinv.alpha == t.alpha);
    CHECK(rotation_angle_between(tilt_to_quat(tinv), qc) < 1e-9);
  }
}

TEST_CASE("fused yaw of a quaternion, including the singular convention") {
  CHECK(fused_yaw(Quat::rot_z(0.5 * kPi)) == doctest::Approx(0.5 * kPi).epsilon(1e-14));
  CHECK(fused_yaw(Quat{0.5, 0.5, 0.5, 0.5}) == doctest::Approx(0.5 * kPi).epsilon(1e-14));

  const Quat singular{0.0, 1.0, 0.0, 0.0};
  CHECK(fused_yaw(singular) == 0.0);
  CHECK(fused_yaw_singular(singular));
  CHECK_FALSE(fused_yaw_singular(Quat::identity()));
}

TEST_CASE("yaw_quat hand-derived values") {
  const Quat pure = Quat::rot_z(0.5 * kPi);
  CHECK(quat_diff_up_to_sign(yaw_quat(pure), pure) < 1e-15);

  const Quat y = yaw_quat({0.5, 0.5, 0.5, 0.5});
  CHECK(y.w == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(y.x == 0.0);
  CHECK(y.y == 0.0);
  CHECK(y.z == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));

  CHECK_THROWS_AS(yaw_quat({0.0, std::cos(1.0), std::sin(1.0), 0.0}), DomainError);
}

TEST_CASE("remove_yaw hand-derived values and error text") {
  CHECK(quat_diff_up_to_sign(remove_yaw(Quat::rot_z(0.5 * kPi)), Quat::identity()) < 1e-15);

  const Quat t = remove_yaw({0.5, 0.5, 0.5, 0.5});
  CHECK(t.w == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(t.x == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(std::abs(t.y) < 1e-15);
  CHECK(t.z == 0.0);

  try {
    remove_yaw({0.0, 1.0, 0.0, 0.0});
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()) == "fused yaw singular (alpha = pi)");
  }
}

TEST_CASE("yaw split properties") {
  auto rng = seeded_rng(33);
  for (int i = 0; i < 2000; ++i) {
    const Quat q = random_rotation(rng);
    const Quat yq = yaw_quat(q);
    const Quat tq = remove_yaw(q);

    CHECK(tq.z == 0.0);                 // exact by construction
    CHECK(fused_yaw(tq) == 0.0);        // z = 0 and w > 0
    CHECK(quat_diff_up_to_sign(yq, Quat::rot_z(fused_yaw(q))) < 1e-12);
    CHECK(quat_diff_up_to_sign(yq * tq, q) < 1e-10);

    const FusedAngles fq = quat_to_fused(q);
    const FusedAngles ft = quat_to_fused(tq);
    CHECK(std::abs(ft.theta - fq.theta) < 1e-10);
    CHECK(std::abs(ft.phi - fq.phi) < 1e-10);
    CHECK(ft.hemi == fq.hemi);
    CHECK(ft.psi == 0.0);
  }
}

TEST_CASE("standard_form resolves the boundary and singular ambiguities") {
  const FusedAngles bd = standard_form({1.0, 45.0 * kDeg, 45.0 * kDeg, -1});
  CHECK(bd.hemi == 1);
  CHECK(bd.psi == 1.0);
  CHECK(bd.theta == 45.0 * kDeg);

  const FusedAngles sing = standard_form({37.0 * kDeg, 0.0, 0.0, -1});
  CHECK(sing.psi == 0.0);
  CHECK(sing.theta == 0.0);
  CHECK(sing.phi == 0.0);
  CHECK(sing.hemi == -1);

  const FusedAngles plain = standard_form({10.0 * kDeg, 20.0 * kDeg, 30.0 * kDeg, 1});
  CHECK(plain.psi == 10.0 * kDeg);
  CHECK(plain.theta == 20.0 * kDeg);
  CHECK(plain.phi == 30.0 * kDeg);
  CHECK(plain.hemi == 1);

  auto rng = seeded_rng(34);
  for (int i = 0; i < 500; ++i) {
    const FusedAngles f = quat_to_fused(random_rotation(rng));
    const FusedAngles s1 = standard_form(f);
    const FusedAngles s2 = standard_form(s1);
    CHECK(s1.psi == s2.psi);
    CHECK(s1.theta == s2.theta);
    CHECK(s1.phi == s2.phi);
    CHECK(s1.hemi == s2.hemi);
  }
}

TEST_CASE("fused_equal identifies boundary and singular families") {
  CHECK(fused_equal({0.0, 0.0, 0.0, -1}, {170.0 * kDeg, 0.0, 0.0, -1}, 1e-12));
  CHECK(fused_equal({0.7, 45.0 * kDeg, 45.0 * kDeg, 1}, {0.7, 45.0 * kDeg, 45.0 * kDeg, -1},
                    1e-12));
  CHECK_FALSE(fused_equal({0.0, 0.0, 0.0, 1}, {1.0 * kDeg, 0.0, 0.0, 1}, 1e-6));
  // psi wraps: +pi and -pi are the same angle.
  CHECK(fused_equal({kPi, 0.2, 0.1, 1}, {-kPi, 0.2, 0.1, 1}, 1e-12));

  auto rng = seeded_rng(35);
  for (int i = 0; i < 300; ++i) {
    const FusedAngles a = quat_to_fused(random_rotation(rng));
    const FusedAngles b = quat_to_fused(random_rotation(rng));
    CHECK(fused_equal(a, a, 1e-12));
    CHECK(fused_equal(a, b, 1e-9) == fused_equal(b, a, 1e-9));
  }
}

TEST_CASE("classify_singularity covers the three regimes") {
  const SingularityClass id = classify_singularity(Quat::identity());
  CHECK(id.tilt_axis_singular);
  CHECK_FALSE(id.fused_yaw_singular);
  CHECK(id.alpha == 0.0);

  const SingularityClass flip = classify_singularity({0.0, 1.0, 0.0, 0.0});
  CHECK(flip.fused_yaw_singular);
  CHECK(flip.tilt_axis_singular);
  CHECK(flip.near_fused_yaw_singular);
  CHECK(flip.alpha == doctest::Approx(kPi));

  const SingularityClass gen = classify_singularity({0.5, 0.5, 0.5, 0.5});
  CHECK(gen.none());
  CHECK(gen.alpha == doctest::Approx(0.5 * kPi));

  // Close to but not at the singularity: warned, not singular.
  const Quat near = tilt_to_quat({0.0, 0.3, kPi - 2e-7});
  const SingularityClass nc = classify_singularity(near);
  CHECK(nc.near_fused_yaw_singular);
  CHECK_FALSE(nc.fused_yaw_singular);
}

TEST_CASE("quat_dot_tilt matches the quaternion dot product") {
  CHECK(quat_dot_tilt({0.0, 0.0, 0.0}, {1.2, 0.0, 0.0}) == doctest::Approx(std::cos(0.6)));
  CHECK(quat_dot_tilt({0.0, 0.0, 0.0}, {0.0, 0.0, 120.0 * kDeg}) == doctest::Approx(0.5));

  auto rng = seeded_rng(36);
  for (int i = 0; i < 1000; ++i) {
    const Quat qa = random_rotation(rng);
    const Quat qb = random_rotation(rng);
    const TiltAngles ta = quat_to_tilt(qa);
    const TiltAngles tb = quat_to_tilt(qb);
    CHECK(quat_dot_tilt(ta, ta) == doctest::Approx(1.0).epsilon(1e-12));
    // The tilt tuple forgets the quaternion sign, so compare magnitudes.
    CHECK(std::abs(quat_dot_tilt(ta, tb)) == doctest::Approx(std::abs(dot(qa, qb))).epsilon(1e-11));
  }
}

TEST_CASE("metric values on axis rotations") {
  for (double beta = -kPi + 0.01; beta < kPi; beta += 0.2) {
    CHECK(metric_dR(Quat::identity(), Quat::rot_z(beta)) ==
          doctest::Approx(std::abs(beta)).epsilon(1e-12));
  }
  CHECK(metric_dR(Quat::identity(), Quat::rot_x(120.0 * kDeg)) ==
        doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(metric_dL(Quat::identity(), Quat::rot_x(120.0 * kDeg)) ==
        doctest::Approx(0.5).epsilon(1e-12));

  const Quat q{0.5, 0.5, 0.5, 0.5};
  CHECK(metric_dR(q, q) == 0.0);
  CHECK(metric_dL(q, q) == 0.0);
  CHECK(metric_dR(q, -q) == 0.0);  // same rotation

  CHECK(metric(MetricKind::linear_dL, Quat::identity(), Quat::rot_x(120.0 * kDeg)).value ==
        doctest::Approx(0.5));
  CHECK(metric(MetricKind::riemannian_dR, q, q).kind == MetricKind::riemannian_dR);
}

TEST_CASE("metric overloads agree across representations") {
  auto rng = seeded_rng(37);
  for (int i = 0; i < 1000; ++i) {
    const Quat qa = random_rotation(rng);
    const Quat qb = random_rotation(rng);
    const double dq = metric_dR(qa, qb);
    CHECK(std::abs(metric_dR(quat_to_tilt(qa), quat_to_tilt(qb)) - dq) < 1e-9);
    CHECK(std::abs(metric_dR(quat_to_fused(qa), quat_to_fused(qb)) - dq) < 1e-9);
    CHECK(std::abs(metric_dL(quat_to_tilt(qa), quat_to_tilt(qb)) - metric_dL(qa, qb)) < 1e-9);
    CHECK(metric_dR(qa, qb) == metric_dR(qb, qa));
    CHECK(dq >= 0.0);
    CHECK(dq <= kPi + 1e-12);
  }
}

TEST_CASE("slerp endpoints, midpoint and geodesic speed") {
  const Quat a = Quat::identity();
  const Quat b = Quat::rot_z(0.5 * kPi);
  CHECK(quat_diff_up_to_sign(slerp(a, b, 0.0), a) < 1e-15);
  CHECK(quat_diff_up_to_sign(slerp(a, b, 1.0), b) < 1e-15);
  CHECK(quat_diff_up_to_sign(slerp(a, b, 0.5), Quat::rot_z(0.25 * kPi)) < 1e-12);

  auto rng = seeded_rng(38);
  for (int i = 0; i < 500; ++i) {
    const Quat qa = random_rotation(rng);
    const Quat qb = random_rotation(rng);
    const double full = rotation_angle_between(qa, qb);
    for (double t : {0.25, 0.5, 0.75}) {
      const Quat s = slerp(qa, qb, t);
      CHECK(std::abs(rotation_angle_between(qa, s) - t * full) < 1e-10);
    }
  }

  CHECK_THROWS_AS(slerp(a, b, 1.5), DomainError);
  CHECK_THROWS_AS(slerp(a, b, -0.1), DomainError);
}

TEST_CASE("slerp flags antipodal pairs and stays deterministic") {
  const Quat a = Quat::identity();
  const Quat b{0.0, 1.0, 0.0, 0.0};
  bool anti = false;
  const Quat mid = slerp(a, b, 0.5, &anti);
  CHECK(anti);
  CHECK(metric_dR(a, mid) == doctest::Approx(0.5 * kPi).epsilon(1e-12));

  const Quat m1 = slerp(a, b, 0.3);
  const Quat m2 = slerp(a, -b, 0.3);
  CHECK(m1.w == m2.w);
  CHECK(m1.x == m2.x);
  CHECK(m1.y == m2.y);
  CHECK(m1.z == m2.z);

  anti = true;
  slerp(a, Quat::rot_x(0.4), 0.5, &anti);
  CHECK_FALSE(anti);
}

TEST_CASE("composition is the group product in every representation") {
  const Quat qx = Quat::rot_x(0.5 * kPi);
  const Quat qy = Quat::rot_y(0.5 * kPi);
  CHECK(matrix_diff(quat_to_rotmat(compose(qx, qy)),
                    RotMat::rot_x(0.5 * kPi) * RotMat::rot_y(0.5 * kPi)) < 1e-12);

  auto rng = seeded_rng(39);
  for (int i = 0; i < 500; ++i) {
    const Quat qa = random_rotation(rng);
    const Quat qb = random_rotation(rng);
    CHECK(quat_diff_up_to_sign(compose(qa, qa.conjugate()), Quat::identity()) < 1e-12);

    const RotMat rc = compose(quat_to_rotmat(qa), quat_to_rotmat(qb));
    CHECK(matrix_diff(rc, quat_to_rotmat(compose(qa, qb))) < 1e-10);

    const FusedAngles fc = compose(quat_to_fused(qa), quat_to_fused(qb));
    CHECK(rotation_angle_between(fused_to_quat(fc), compose(qa, qb)) < 1e-9);

    const TiltAngles tc = compose(quat_to_tilt(qa), quat_to_tilt(qb));
    CHECK(rotation_angle_between(tilt_to_quat(tc), compose(qa, qb)) < 1e-9);
  }
}

TEST_CASE("composing a pure z-rotation adds fused yaw") {
  auto rng = seeded_rng(40);
  for (int i = 0; i < 500; ++i) {
    const Quat q = random_rotation(rng);
    if (q.w * q.w + q.z * q.z < 1e-8) continue;
    const double beta = uniform(rng, -kPi, kPi);
    const FusedAngles before = quat_to_fused(q);
    const FusedAngles after = compose(quat_to_fused(Quat::rot_z(beta)), before);
    CHECK(wrap_diff(after.psi, before.psi + beta) < 1e-10);
    CHECK(std::abs(after.theta - before.theta) < 1e-10);
    CHECK(std::abs(after.phi - before.phi) < 1e-10);
  }
}

TEST_CASE("fused_lerp interpolates inside the positive hemisphere") {
  const FusedAngles a{170.0 * kDeg, 0.2, 0.1, 1};
  const FusedAngles b{-170.0 * kDeg, -0.3, 0.4, 1};
  const FusedAngles mid = fused_lerp(a, b, 0.5);
  CHECK(wrap_diff(mid.psi, kPi) < 1e-12);  // shortest path crosses the wrap
  CHECK(mid.theta == doctest::Approx(-0.05).epsilon(1e-14));
  CHECK(mid.phi == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_NOTHROW(require_valid(mid));

  const FusedAngles e0 = fused_lerp(a, b, 0.0);
  CHECK(e0.psi == doctest::Approx(a.psi));
  CHECK(e0.theta == a.theta);

  auto rng = seeded_rng(41);
  for (int i = 0; i < 300; ++i) {
    FusedAngles fa = quat_to_fused(random_rotation(rng));
    FusedAngles fb = quat_to_fused(random_rotation(rng));
    if (fa.hemi != 1 || fb.hemi != 1) continue;
    CHECK_NOTHROW(require_valid(fused_lerp(fa, fb, canonical_double(rng))));
  }

  CHECK_THROWS_AS(fused_lerp({0.0, 0.0, 0.0, -1}, b, 0.5), DomainError);
  CHECK_THROWS_AS(fused_lerp(a, b, 2.0), DomainError);
}
