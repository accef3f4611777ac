#include <random>

#include "doctest.h"
#include "hopfcone/errors.hpp"
#include "hopfcone/hopf.hpp"
#include "oracles.hpp"

using namespace hopfcone;

namespace {

double base_diff(const BasePoint& p, const BasePoint& q) {
  return std::max({std::abs(p.a() - q.a()), std::abs(p.b() - q.b()), std::abs(p.c() - q.c())});
}

}  // namespace

TEST_CASE("hopf map of the identity is the north pole") {
  CHECK(base_diff(hopf_map(SU2Element::identity()), BasePoint::cartesian(0, 0, 1)) < 1e-15);
}

TEST_CASE("hopf map matches P k P^dagger computed with complex matrices") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const SU2Element p = sample_su2(rng);
    const oracle::Vec4 v{p.w(), p.x(), p.y(), p.z()};
    const auto m = oracle::to_matrix(v);
    const auto k = oracle::to_matrix({0, 0, 0, 1});
    auto dagger = oracle::conjugate(oracle::transpose(m));
    const oracle::Vec4 img = oracle::from_matrix(oracle::mul(oracle::mul(m, k), dagger));
    CHECK(base_diff(hopf_map(p), BasePoint::cartesian(img[1], img[2], img[3])) < 1e-14);
  }
}

TEST_CASE("fibre over a base point maps back onto it") {
  std::mt19937_64 rng(22);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const BasePoint b = sample_base_point(rng);
    const GreatCircle f = fibre_over(b);
    for (int k = 0; k < 8; ++k) worst = std::max(worst, base_diff(hopf_map(f.point(k * 0.785)), b));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("fibre frame at and near the south pole") {
  const SU2Element p = fibre_frame(BasePoint::cartesian(0, 0, -1));
  CHECK(matrix_max_diff(p, SU2Element(0, 0, 1, 0)) < 1e-15);
  // Inside the 1e-9 cap the exceptional frame is used.
  const BasePoint inside = BasePoint::cartesian(1e-7, -2e-7, -1.0);
  CHECK(matrix_max_diff(fibre_frame(inside), SU2Element(0, 0, 1, 0)) < 1e-15);
  // Just outside it the general formula stays accurate.
  const double c = -1.0 + 1e-8, r = std::sqrt(1.0 - c * c);
  const BasePoint outside = BasePoint::cartesian(0.6 * r, -0.8 * r, c);
  CHECK(base_diff(hopf_map(fibre_frame(outside)), outside) < 1e-14);
}

TEST_CASE("polar coordinates round trip and fibre frame agrees with polar matrix") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> psi(0.0, kTwoPi), theta(0.01, kPi - 0.01);
  for (int i = 0; i < 200; ++i) {
    const double s = psi(rng), t = theta(rng);
    const BasePoint b = BasePoint::polar(s, t);
    const PolarAngles back = b.to_polar();
    CHECK(std::abs(wrap_pi(back.psi - s)) < 1e-12);
    CHECK(std::abs(back.theta - t) < 1e-12);
    CHECK(matrix_max_diff(fibre_frame(b), polar_matrix(s, t)) < 1e-12);
  }
}

TEST_CASE("fibres are Clifford parallel at half the base distance") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const BasePoint p = sample_base_point(rng), q = sample_base_point(rng);
    const Perpendicular perp = common_perpendicular(fibre_over(p), fibre_over(q));
    CHECK(std::abs(perp.delta - fibre_distance(p, q)) < 1e-10);
    CHECK_FALSE(perp.unique);
    // Every point of one fibre is at the same distance from the other.
    const GreatCircle f = fibre_over(p), g = fibre_over(q);
    for (double t = 0.0; t < 6.0; t += 1.3) {
      const SU2Element x = f.point(t);
      const double d = std::acos(std::min(1.0, std::hypot(dot(x, g.start()), dot(x, g.velocity()))));
      CHECK(std::abs(d - perp.delta) < 1e-8);
    }
  }
}

TEST_CASE("antipodal base points give maximally distant fibres") {
  const BasePoint p = BasePoint::cartesian(0.3, -0.4, 0.5);
  CHECK(fibre_distance(p, p.antipode()) == doctest::Approx(kPi / 2));
  const Perpendicular perp = common_perpendicular(fibre_over(p), fibre_over(p.antipode()));
  CHECK(perp.delta == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("rotation about a fibre fixes it pointwise and rotates the base") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double psi = kTwoPi * u(rng), theta = kPi * u(rng), omega = kTwoPi * u(rng);
    const IsometryS3 rot = rotation_about_fibre(psi, theta, omega);
    const GreatCircle axis = fibre_over(BasePoint::polar(psi, theta));
    for (int k = 0; k < 16; ++k) {
      const SU2Element x = axis.point(kTwoPi * k / 16);
      CHECK(matrix_max_diff(apply(rot, x), x) < 1e-12);
    }
    if (std::sin(0.5 * omega) > 1e-3) {
      CHECK(base_diff(axis_base_point(rot), BasePoint::polar(psi, theta)) < 1e-10);
    }
    // Points off the axis move by a rotation angle of omega about it in the base.
    const SU2Element y = sample_su2(rng);
    const BasePoint moved = hopf_map(apply(rot, y));
    CHECK(std::abs(base_distance(moved, BasePoint::polar(psi, theta)) -
                   base_distance(hopf_map(y), BasePoint::polar(psi, theta))) < 1e-10);
  }
}

TEST_CASE("R(omega) acts on the base as rotation of longitude") {
  const double omega = 0.9;
  const ImaginaryQuaternion q(BasePoint::polar(0.4, 1.1));
  const ImaginaryQuaternion r = s2_action(rotation_matrix(omega), q);
  const PolarAngles pa = r.base_point().to_polar();
  CHECK(pa.theta == doctest::Approx(1.1));
  CHECK(wrap_two_pi(pa.psi) == doctest::Approx(0.4 + omega));
}

TEST_CASE("rotation with trivial left factor has no axis") {
  CHECK_THROWS_AS(axis_base_point(rotation_about_fibre(0.3, 0.4, 0.0)), DomainError);
  CHECK_THROWS_AS(BasePoint::cartesian(0, 0, 0), DomainError);
}
