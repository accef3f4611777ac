#pragma once

// Unit quaternions as SU(2) matrices, the round metric on S^3, great circles,
// and the two-sided isometry action of SU(2) x SU(2).
//
// A point p = (w, x, y, z) of S^3 is identified with the matrix
//
//     P = [  w + ix   y + iz ]
//         [ -y + iz   w - ix ]
//
// so that matrix multiplication is the Hamilton product with basis
// (1, i, j, k) <-> (id, diag(i, -i), [[0,1],[-1,0]], [[0,i],[i,0]]).
// Matrix transpose flips the sign of y; complex conjugation flips x and z.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace hopfcone {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2pi).
double wrap_two_pi(double angle);

/// Reduces an angle to (-pi, pi].
double wrap_pi(double angle);

using Matrix2c = std::array<std::array<std::complex<double>, 2>, 2>;

class SU2Element {
 public:
  /// The identity.
  constexpr SU2Element() = default;

  /// Normalizes (w, x, y, z) onto S^3. Throws DomainError on a zero vector.
  SU2Element(double w, double x, double y, double z);

  static SU2Element identity() { return {}; }

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  std::array<double, 4> coords() const { return {w_, x_, y_, z_}; }

  Matrix2c matrix() const;
  double trace() const { return 2.0 * w_; }

  SU2Element transpose() const;
  /// Entrywise complex conjugate of the matrix.
  SU2Element conj() const;
  /// Conjugate transpose, i.e. the group inverse.
  SU2Element inverse() const;
  SU2Element operator-() const;

  friend SU2Element operator*(const SU2Element& a, const SU2Element& b);

 private:
  struct Raw {};
  constexpr SU2Element(Raw, double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {}

  double w_ = 1.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

/// Euclidean inner product in R^4, equal to (1/2) Re tr(P^t conj(Q)).
double dot(const SU2Element& p, const SU2Element& q);

/// Largest complex-entry modulus of the matrix difference a - b.
double matrix_max_diff(const SU2Element& a, const SU2Element& b);

/// matrix_max_diff minimized over the global sign of b.
double lift_distance(const SU2Element& a, const SU2Element& b);

/// Entrywise max-norm of the commutator ab - ba.
double commutator_norm(const SU2Element& a, const SU2Element& b);

/// Spherical distance on S^3, in [0, pi].
double distance(const SU2Element& p, const SU2Element& q);

/// Uniformly distributed point of S^3.
template <class Rng>
SU2Element sample_su2(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const double w = normal(rng), x = normal(rng), y = normal(rng), z = normal(rng);
    if (w * w + x * x + y * y + z * z > 1e-12) return {w, x, y, z};
  }
}

/// An orientation-preserving isometry of S^3 lifted to SU(2) x SU(2), acting
/// by P -> left^t P conj(right). The pair and its negative act identically.
struct IsometryS3 {
  SU2Element left;
  SU2Element right;

  static IsometryS3 identity() { return {}; }

  IsometryS3 inverse() const { return {left.inverse(), right.inverse()}; }
  IsometryS3 operator-() const { return {-left, -right}; }

  /// Factorwise product. Acts on the right: apply(g * h, P) = apply(h, apply(g, P)).
  friend IsometryS3 operator*(const IsometryS3& g, const IsometryS3& h) {
    return {g.left * h.left, g.right * h.right};
  }
};

SU2Element apply(const IsometryS3& g, const SU2Element& p);

/// Composition as maps: apply(compose(g, h), P) = apply(g, apply(h, P)).
IsometryS3 compose(const IsometryS3& g, const IsometryS3& h);

/// g m g^-1, factorwise.
IsometryS3 conjugate_by(const IsometryS3& g, const IsometryS3& m);

/// Max of lift_distance over both factors, with one common sign.
double isometry_lift_distance(const IsometryS3& a, const IsometryS3& b);

/// Great circle C(t) = start cos t + velocity sin t.
class GreatCircle {
 public:
  /// Throws DomainError unless |cos d(start, velocity)| <= 1e-8; smaller
  /// deviations are removed by re-orthogonalizing the velocity.
  GreatCircle(const SU2Element& start, const SU2Element& velocity);

  const SU2Element& start() const { return start_; }
  const SU2Element& velocity() const { return velocity_; }

  SU2Element point(double t) const;
  /// Unit tangent dC/dt.
  SU2Element tangent(double t) const;

 private:
  SU2Element start_;
  SU2Element velocity_;
};

inline SU2Element geodesic_point(const GreatCircle& c, double t) { return c.point(t); }

/// A shortest geodesic segment between two great circles.
struct Perpendicular {
  double t1 = 0.0;
  double t2 = 0.0;
  double delta = 0.0;
  SU2Element foot1;
  SU2Element foot2;
  /// False when the circles are equidistant (Clifford parallel) and the
  /// canonical perpendicular through t1 = 0 was chosen.
  bool unique = true;

  /// The perpendicular as a unit-speed circle with C(0) = foot1 and
  /// C(delta) = foot2. Requires delta > 0.
  GreatCircle geodesic() const;
};

/// Minimal-length common perpendicular. Throws IdenticalCircles when the two
/// circles coincide as point sets.
Perpendicular common_perpendicular(const GreatCircle& c1, const GreatCircle& c2);

struct TranslationJump {
  double delta = 0.0;  ///< translation length, in [0, pi]
  double nu = 0.0;     ///< jump, in [0, pi]
};

/// Trace-based translation length and jump. Depends only on the conjugacy
/// class of the pair up to the lift sign; in particular the translation of a
/// screw motion along a closed geodesic of length 2pi is folded into [0, pi].
TranslationJump translation_length_and_jump(const IsometryS3& m);

/// Screw parameters of m along the fixed axis of a rotation it commutes with.
struct ScrewMotion {
  double translation = 0.0;  ///< in [0, 2pi)
  double rotation = 0.0;     ///< in [0, 2pi)
};

/// Simultaneously diagonalizes `reference` (a rotation with non-trivial
/// left and right factors) and `m`, normalized so that reference has
/// positive half-angles in both factors, and reads off
/// translation = (right angle - left angle) and rotation = (right + left)
/// of m, mod 2pi. `m` must commute with `reference`.
ScrewMotion axial_screw(const IsometryS3& m, const IsometryS3& reference);

}  // namespace hopfcone
