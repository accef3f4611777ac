#include <random>

#include "doctest.h"
#include "hopfcone/errors.hpp"
#include "hopfcone/su2.hpp"
#include "oracles.hpp"

using namespace hopfcone;

namespace {

oracle::Vec4 vec(const SU2Element& p) { return {p.w(), p.x(), p.y(), p.z()}; }

double max_diff(const oracle::Vec4& a, const oracle::Vec4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("product agrees with complex 2x2 matrix multiplication") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const SU2Element a = sample_su2(rng), b = sample_su2(rng);
    const auto expected = oracle::from_matrix(oracle::mul(oracle::to_matrix(vec(a)), oracle::to_matrix(vec(b))));
    CHECK(max_diff(vec(a * b), expected) < 1e-14);
  }
}

TEST_CASE("basis elements multiply as quaternion units") {
  const SU2Element i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
  CHECK(matrix_max_diff(i * j, k) < 1e-15);
  CHECK(matrix_max_diff(j * k, i) < 1e-15);
  CHECK(matrix_max_diff(k * i, j) < 1e-15);
  CHECK(matrix_max_diff(i * i, -SU2Element::identity()) < 1e-15);
}

TEST_CASE("transpose, conjugate and inverse") {
  const SU2Element p(0.1, 0.2, 0.3, 0.4);
  const auto m = oracle::to_matrix(vec(p));
  CHECK(max_diff(vec(p.transpose()), oracle::from_matrix(oracle::transpose(m))) < 1e-15);
  CHECK(max_diff(vec(p.conj()), oracle::from_matrix(oracle::conjugate(m))) < 1e-15);
  CHECK(matrix_max_diff(p * p.inverse(), SU2Element::identity()) < 1e-15);
  CHECK(p.trace() == doctest::Approx(2.0 * p.w()));
}

TEST_CASE("zero quaternion is rejected") {
  CHECK_THROWS_AS(SU2Element(0, 0, 0, 0), DomainError);
}

TEST_CASE("isometry action matches the matrix formula and preserves distance") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const IsometryS3 g{sample_su2(rng), sample_su2(rng)};
    const SU2Element p = sample_su2(rng), q = sample_su2(rng);
    CHECK(max_diff(vec(apply(g, p)), oracle::act(vec(g.left), vec(g.right), vec(p))) < 1e-14);
    CHECK(std::abs(distance(apply(g, p), apply(g, q)) - oracle::sphere_distance(vec(p), vec(q))) < 1e-7);
    CHECK(matrix_max_diff(apply(-g, p), apply(g, p)) < 1e-15);
  }
}

TEST_CASE("factorwise product acts on the right, compose acts as maps") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const IsometryS3 g{sample_su2(rng), sample_su2(rng)}, h{sample_su2(rng), sample_su2(rng)};
    const SU2Element p = sample_su2(rng);
    CHECK(matrix_max_diff(apply(g * h, p), apply(h, apply(g, p))) < 1e-14);
    CHECK(matrix_max_diff(apply(compose(g, h), p), apply(g, apply(h, p))) < 1e-14);
    CHECK(matrix_max_diff(apply(g.inverse(), apply(g, p)), p) < 1e-14);
  }
}

TEST_CASE("isometry lift distance ignores the joint sign only") {
  const IsometryS3 g{SU2Element(1, 2, 3, 4), SU2Element(4, 3, 2, 1)};
  CHECK(isometry_lift_distance(g, -g) < 1e-15);
  const IsometryS3 mixed{g.left, -g.right};
  CHECK(isometry_lift_distance(g, mixed) > 0.5);
}

TEST_CASE("great circle requires orthonormal data") {
  CHECK_THROWS_AS(GreatCircle(SU2Element(1, 0, 0, 0), SU2Element(1, 1, 0, 0)), DomainError);
  const GreatCircle c(SU2Element(1, 0, 0, 0), SU2Element(0, 1, 0, 0));
  CHECK(matrix_max_diff(c.point(kPi / 2), SU2Element(0, 1, 0, 0)) < 1e-15);
  CHECK(std::abs(dot(c.point(0.7), c.tangent(0.7))) < 1e-15);
}

TEST_CASE("common perpendicular against the brute-force oracle") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 3; ++i) {
    const SU2Element s1 = sample_su2(rng), s2 = sample_su2(rng);
    SU2Element v1 = sample_su2(rng), v2 = sample_su2(rng);
    const auto orth = [](const SU2Element& s, const SU2Element& v) {
      const double d = dot(s, v);
      return SU2Element(v.w() - d * s.w(), v.x() - d * s.x(), v.y() - d * s.y(), v.z() - d * s.z());
    };
    v1 = orth(s1, v1);
    v2 = orth(s2, v2);
    const Perpendicular p = common_perpendicular(GreatCircle(s1, v1), GreatCircle(s2, v2));
    const double expected = oracle::brute_force_circle_distance(vec(s1), vec(v1), vec(s2), vec(v2), 1000);
    CHECK(std::abs(p.delta - expected) < 1e-8);
    CHECK(std::abs(distance(p.foot1, p.foot2) - p.delta) < 1e-7);
    CHECK(p.unique);
  }
}

TEST_CASE("identical circles are rejected") {
  const GreatCircle c(SU2Element(1, 0, 0, 0), SU2Element(0, 0, 0, 1));
  const GreatCircle shifted(c.point(0.3), c.tangent(0.3));
  CHECK_THROWS_AS(common_perpendicular(c, shifted), IdenticalCircles);
}

TEST_CASE("perpendicular geodesic runs from foot to foot") {
  const GreatCircle c1(SU2Element(1, 0, 0, 0), SU2Element(0, 1, 0, 0));
  const GreatCircle c3(SU2Element(std::cos(0.4), 0, std::sin(0.4), 0), SU2Element(0, 0.6, 0, 0.8));
  const Perpendicular p = common_perpendicular(c1, c3);
  const GreatCircle g = p.geodesic();
  CHECK(matrix_max_diff(g.point(0.0), p.foot1) < 1e-14);
  CHECK(matrix_max_diff(g.point(p.delta), p.foot2) < 1e-12);
}

TEST_CASE("translation length of a pure screw") {
  // <R(a), R(b)> style pair: left half-angle g, right half-angle f.
  const double g = 0.3, f = 1.1;
  const IsometryS3 m{SU2Element(std::cos(g), 0, 0, std::sin(g)), SU2Element(std::cos(f), 0, 0, std::sin(f))};
  const TranslationJump tj = translation_length_and_jump(m);
  CHECK(tj.delta == doctest::Approx(f - g).epsilon(1e-14));
  CHECK(tj.nu == doctest::Approx(f + g).epsilon(1e-14));
  const auto angles = oracle::so4_angles(oracle::so4_matrix(vec(m.left), vec(m.right)));
  CHECK(std::abs(angles[0] - (f - g)) < 1e-12);
  CHECK(std::abs(angles[1] - (f + g)) < 1e-12);
}

TEST_CASE("axial screw reads translation beyond pi") {
  const IsometryS3 ref{SU2Element(std::cos(0.5), 0, 0, std::sin(0.5)), SU2Element(std::cos(0.5), 0, 0, std::sin(0.5))};
  const double g = 0.2, f = 2.6;  // translation 2.4, rotation 2.8
  const IsometryS3 m{SU2Element(std::cos(g), 0, 0, std::sin(g)), SU2Element(std::cos(f), 0, 0, std::sin(f))};
  const ScrewMotion s = axial_screw(m, ref);
  CHECK(s.translation == doctest::Approx(2.4).epsilon(1e-14));
  CHECK(s.rotation == doctest::Approx(2.8).epsilon(1e-14));
  const IsometryS3 flipped{SU2Element(std::cos(g), 0, 0, std::sin(g)), SU2Element(std::cos(f + 1.5), 0, 0, std::sin(f + 1.5))};
  CHECK(axial_screw(flipped, ref).translation == doctest::Approx(3.9).epsilon(1e-14));
  CHECK_THROWS_AS(axial_screw(m, IsometryS3::identity()), DomainError);
}

TEST_CASE("angle wrapping") {
  CHECK(wrap_two_pi(-0.5) == doctest::Approx(kTwoPi - 0.5));
  CHECK(wrap_two_pi(kTwoPi) == doctest::Approx(0.0));
  CHECK(wrap_pi(kPi + 0.5) == doctest::Approx(-kPi + 0.5));
}
