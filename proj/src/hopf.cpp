#include "hopfcone/hopf.hpp"

#include <algorithm>

#include "hopfcone/diagnostics.hpp"
#include "hopfcone/errors.hpp"

namespace hopfcone {

namespace {

constexpr double kSouthPoleTol = 1e-9;

// F^ = [[0, i], [i, 0]], the quaternion k.
const SU2Element kFibreDirection(0.0, 0.0, 0.0, 1.0);

}  // namespace

BasePoint BasePoint::cartesian(double a, double b, double c) {
  const double n = std::sqrt(a * a + b * b + c * c);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("BasePoint: cannot normalize a zero or non-finite vector");
  }
  return {a / n, b / n, c / n};
}

BasePoint BasePoint::polar(double psi, double theta) {
  const double s = std::sin(theta);
  return {std::cos(psi) * s, std::sin(psi) * s, std::cos(theta)};
}

PolarAngles BasePoint::to_polar() const {
  const double r = std::hypot(a_, b_);
  PolarAngles out;
  out.theta = std::atan2(r, c_);
  out.psi = r == 0.0 ? 0.0 : wrap_two_pi(std::atan2(b_, a_));
  return out;
}

bool approx_equal(const BasePoint& p, const BasePoint& q, double tol) {
  return std::abs(p.a() - q.a()) <= tol && std::abs(p.b() - q.b()) <= tol &&
         std::abs(p.c() - q.c()) <= tol;
}

double base_distance(const BasePoint& p, const BasePoint& q) {
  // atan2 form keeps accuracy for nearly equal and nearly antipodal points.
  const double cx = p.b() * q.c() - p.c() * q.b();
  const double cy = p.c() * q.a() - p.a() * q.c();
  const double cz = p.a() * q.b() - p.b() * q.a();
  const double s = std::sqrt(cx * cx + cy * cy + cz * cz);
  return std::atan2(s, p.a() * q.a() + p.b() * q.b() + p.c() * q.c());
}

ImaginaryQuaternion::ImaginaryQuaternion(double x, double y, double z) {
  const double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("ImaginaryQuaternion: cannot normalize a zero or non-finite vector");
  }
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
}

Matrix2c ImaginaryQuaternion::matrix() const {
  using C = std::complex<double>;
  return {{{C(0.0, x_), C(y_, z_)}, {C(-y_, z_), C(0.0, -x_)}}};
}

ImaginaryQuaternion s2_action(const SU2Element& a, const ImaginaryQuaternion& q) {
  const SU2Element image = a.transpose() * SU2Element(0.0, q.x(), q.y(), q.z()) * a.conj();
  return {image.x(), image.y(), image.z()};
}

double s2_distance(const ImaginaryQuaternion& p, const ImaginaryQuaternion& q) {
  return base_distance(p.base_point(), q.base_point());
}

BasePoint hopf_map(const SU2Element& p) {
  const double w = p.w(), x = p.x(), y = p.y(), z = p.z();
  return BasePoint::cartesian(2.0 * (x * z + w * y), 2.0 * (y * z - w * x),
                              1.0 - 2.0 * (x * x + y * y));
}

SU2Element rotation_matrix(double omega) {
  return {std::cos(0.5 * omega), 0.0, 0.0, std::sin(0.5 * omega)};
}

SU2Element fibre_frame(const BasePoint& base) {
  const double a = base.a(), b = base.b(), c = base.c();
  const double r2 = a * a + b * b;
  if (c <= -1.0 + kSouthPoleTol && r2 < 4.0 * kSouthPoleTol) {
    return {0.0, 0.0, 1.0, 0.0};
  }
  // 1 + c without cancellation near the south pole.
  const double one_plus_c = c >= 0.0 ? 1.0 + c : r2 / (1.0 - c);
  const double n = std::sqrt(2.0 * one_plus_c);
  return {one_plus_c / n, -b / n, a / n, 0.0};
}

GreatCircle generic_fibre() { return {SU2Element::identity(), kFibreDirection}; }

GreatCircle fibre_over(const BasePoint& base) {
  const SU2Element p = fibre_frame(base);
  return {p, p * kFibreDirection};
}

SU2Element polar_matrix(double psi, double theta) {
  const double ch = std::cos(0.5 * theta), sh = std::sin(0.5 * theta);
  return {ch, -std::sin(psi) * sh, std::cos(psi) * sh, 0.0};
}

IsometryS3 rotation_about_fibre(double psi, double theta, double omega) {
  const SU2Element m = polar_matrix(psi, theta);
  const SU2Element r = rotation_matrix(omega);
  return {m.conj() * r * m.transpose(), r};
}

ImaginaryQuaternion base_fixed_point(double psi, double theta) {
  const SU2Element m = polar_matrix(psi, theta);
  const SU2Element c = m * kFibreDirection * m.inverse();
  return {c.x(), c.y(), c.z()};
}

double fibre_distance(const BasePoint& p, const BasePoint& q) { return 0.5 * base_distance(p, q); }

BasePoint axis_base_point(const IsometryS3& rotation) {
  // conj(M) F^ M^t has imaginary part (a, -b, c) for the base point (a, b, c).
  const SU2Element& l = rotation.left;
  if (std::sqrt(l.x() * l.x() + l.y() * l.y() + l.z() * l.z()) < 1e-12) {
    throw DomainError("axis_base_point: left factor is +-id");
  }
  return BasePoint::cartesian(l.x(), -l.y(), l.z());
}

}  // namespace hopfcone
