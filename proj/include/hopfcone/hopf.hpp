#pragma once

// The Hopf fibration S^3 -> S^2, its fibres, and rotations about fibres.
//
// Base points use polar coordinates (psi, theta) with
// (a, b, c) = (cos psi sin theta, sin psi sin theta, cos theta), so that
// theta = 0 is the image (0, 0, 1) of the generic fibre through the identity.

#include <random>

#include "hopfcone/su2.hpp"

namespace hopfcone {

struct PolarAngles {
  double psi = 0.0;    ///< in [0, 2pi)
  double theta = 0.0;  ///< in [0, pi]
};

/// A point (a, b, c) of the unit 2-sphere.
class BasePoint {
 public:
  constexpr BasePoint() = default;

  /// Normalizes; throws DomainError on a zero vector.
  static BasePoint cartesian(double a, double b, double c);
  static BasePoint polar(double psi, double theta);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  PolarAngles to_polar() const;
  BasePoint antipode() const { return {-a_, -b_, -c_}; }

 private:
  constexpr BasePoint(double a, double b, double c) : a_(a), b_(b), c_(c) {}

  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 1.0;
};

/// Cartesian comparison at tolerance 1e-10.
bool approx_equal(const BasePoint& p, const BasePoint& q, double tol = 1e-10);

/// Angular distance on S^2, in [0, pi].
double base_distance(const BasePoint& p, const BasePoint& q);

template <class Rng>
BasePoint sample_base_point(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const double a = normal(rng), b = normal(rng), c = normal(rng);
    if (a * a + b * b + c * c > 1e-12) return BasePoint::cartesian(a, b, c);
  }
}

/// Pure imaginary unit quaternion, the matrix [[ix, y+iz], [-y+iz, -ix]].
class ImaginaryQuaternion {
 public:
  constexpr ImaginaryQuaternion() = default;
  /// Normalizes; throws DomainError on a zero vector.
  ImaginaryQuaternion(double x, double y, double z);
  explicit ImaginaryQuaternion(const BasePoint& p) : ImaginaryQuaternion(p.a(), p.b(), p.c()) {}

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Matrix2c matrix() const;
  BasePoint base_point() const { return BasePoint::cartesian(x_, y_, z_); }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 1.0;
};

/// The SU(2) action on S^2: q -> A^t q conj(A).
ImaginaryQuaternion s2_action(const SU2Element& a, const ImaginaryQuaternion& q);

double s2_distance(const ImaginaryQuaternion& p, const ImaginaryQuaternion& q);

/// h(w,x,y,z) = (2(xz + wy), 2(yz - wx), 1 - 2(x^2 + y^2)).
BasePoint hopf_map(const SU2Element& p);

/// R(omega) = [[cos(w/2), i sin(w/2)], [i sin(w/2), cos(w/2)]].
SU2Element rotation_matrix(double omega);

/// The matrix P(a, b, c) carrying the generic fibre onto the fibre over
/// (a, b, c). At the south pole this is [[0, 1], [-1, 0]].
SU2Element fibre_frame(const BasePoint& base);

/// Generic fibre F(t) = id cos t + [[0,i],[i,0]] sin t over (0, 0, 1).
GreatCircle generic_fibre();

/// The fibre P(a,b,c) F(t).
GreatCircle fibre_over(const BasePoint& base);

/// M(psi, theta), the fibre frame written in polar coordinates.
SU2Element polar_matrix(double psi, double theta);

/// <conj(M) R(omega) M^t, R(omega)>: rotation through omega about the fibre
/// over (psi, theta).
IsometryS3 rotation_about_fibre(double psi, double theta, double omega);

/// M F^ conj(M)^t with F^ = [[0,i],[i,0]]: the base point fixed by the left
/// factor of rotation_about_fibre(psi, theta, .).
ImaginaryQuaternion base_fixed_point(double psi, double theta);

/// Length of the common perpendicular of two fibres: half the base distance.
double fibre_distance(const BasePoint& p, const BasePoint& q);

/// The base point whose fibre is the axis of a rotation about a Hopf fibre,
/// read off the imaginary part of the left factor. Throws DomainError when the
/// left factor is +-id.
BasePoint axis_base_point(const IsometryS3& rotation);

}  // namespace hopfcone
