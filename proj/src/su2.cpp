#include "hopfcone/su2.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "hopfcone/diagnostics.hpp"
#include "hopfcone/errors.hpp"

namespace hopfcone {

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

double wrap_pi(double angle) {
  double r = wrap_two_pi(angle);
  if (r > kPi) r -= kTwoPi;
  return r;
}

SU2Element::SU2Element(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("SU2Element: cannot normalize a zero or non-finite vector");
  }
  w_ = w / n;
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
}

Matrix2c SU2Element::matrix() const {
  using C = std::complex<double>;
  return {{{C(w_, x_), C(y_, z_)}, {C(-y_, z_), C(w_, -x_)}}};
}

SU2Element SU2Element::transpose() const { return {Raw{}, w_, x_, -y_, z_}; }

SU2Element SU2Element::conj() const { return {Raw{}, w_, -x_, y_, -z_}; }

SU2Element SU2Element::inverse() const { return {Raw{}, w_, -x_, -y_, -z_}; }

SU2Element SU2Element::operator-() const { return {Raw{}, -w_, -x_, -y_, -z_}; }

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
  return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
          a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
          a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
          a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

double dot(const SU2Element& p, const SU2Element& q) {
  return p.w() * q.w() + p.x() * q.x() + p.y() * q.y() + p.z() * q.z();
}

namespace {

// Largest entry modulus of the matrix of the (non-unit) quaternion d.
double entry_norm(double dw, double dx, double dy, double dz) {
  return std::max(std::hypot(dw, dx), std::hypot(dy, dz));
}

}  // namespace

double matrix_max_diff(const SU2Element& a, const SU2Element& b) {
  return entry_norm(a.w() - b.w(), a.x() - b.x(), a.y() - b.y(), a.z() - b.z());
}

double lift_distance(const SU2Element& a, const SU2Element& b) {
  return std::min(matrix_max_diff(a, b), matrix_max_diff(a, -b));
}

double commutator_norm(const SU2Element& a, const SU2Element& b) {
  // ab - ba only has the cross-product part: 2 (v_a x v_b).
  const double cx = a.y() * b.z() - a.z() * b.y();
  const double cy = a.z() * b.x() - a.x() * b.z();
  const double cz = a.x() * b.y() - a.y() * b.x();
  return entry_norm(0.0, 2.0 * cx, 2.0 * cy, 2.0 * cz);
}

double distance(const SU2Element& p, const SU2Element& q) { return clamped_acos(dot(p, q)); }

SU2Element apply(const IsometryS3& g, const SU2Element& p) {
  return g.left.transpose() * p * g.right.conj();
}

IsometryS3 compose(const IsometryS3& g, const IsometryS3& h) { return h * g; }

IsometryS3 conjugate_by(const IsometryS3& g, const IsometryS3& m) { return g * m * g.inverse(); }

double isometry_lift_distance(const IsometryS3& a, const IsometryS3& b) {
  const double same = std::max(matrix_max_diff(a.left, b.left), matrix_max_diff(a.right, b.right));
  const double flipped =
      std::max(matrix_max_diff(a.left, -b.left), matrix_max_diff(a.right, -b.right));
  return std::min(same, flipped);
}

GreatCircle::GreatCircle(const SU2Element& start, const SU2Element& velocity) : start_(start) {
  const double c = dot(start, velocity);
  if (std::abs(c) > 1e-8) {
    throw DomainError("GreatCircle: start and velocity are not orthogonal");
  }
  velocity_ = SU2Element(velocity.w() - c * start.w(), velocity.x() - c * start.x(),
                         velocity.y() - c * start.y(), velocity.z() - c * start.z());
}

SU2Element GreatCircle::point(double t) const {
  const double c = std::cos(t), s = std::sin(t);
  return {c * start_.w() + s * velocity_.w(), c * start_.x() + s * velocity_.x(),
          c * start_.y() + s * velocity_.y(), c * start_.z() + s * velocity_.z()};
}

SU2Element GreatCircle::tangent(double t) const {
  const double c = std::cos(t), s = std::sin(t);
  return {-s * start_.w() + c * velocity_.w(), -s * start_.x() + c * velocity_.x(),
          -s * start_.y() + c * velocity_.y(), -s * start_.z() + c * velocity_.z()};
}

GreatCircle Perpendicular::geodesic() const {
  const double c = dot(foot1, foot2);
  const SU2Element normal(foot2.w() - c * foot1.w(), foot2.x() - c * foot1.x(),
                          foot2.y() - c * foot1.y(), foot2.z() - c * foot1.z());
  return {foot1, normal};
}

Perpendicular common_perpendicular(const GreatCircle& c1, const GreatCircle& c2) {
  // cos d(C1(s), C2(t)) = u(s)^T G v(t) with u = (cos s, sin s), v likewise;
  // its maximum over the two unit circles is the top singular value of G.
  Eigen::Matrix2d g;
  g << dot(c1.start(), c2.start()), dot(c1.start(), c2.velocity()),
      dot(c1.velocity(), c2.start()), dot(c1.velocity(), c2.velocity());

  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(g, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector2d sigma = svd.singularValues();
  if (sigma(1) > 1.0 - 1e-12) {
    throw IdenticalCircles("common_perpendicular: circles coincide");
  }

  Perpendicular p;
  if (sigma(0) - sigma(1) < 1e-10) {
    // Equidistant circles: every point of C1 is a foot. Take C1(0).
    p.unique = false;
    p.t1 = 0.0;
    p.t2 = wrap_two_pi(std::atan2(g(0, 1), g(0, 0)));
    p.delta = clamped_acos(std::hypot(g(0, 0), g(0, 1)));
  } else {
    Eigen::Vector2d u = svd.matrixU().col(0);
    Eigen::Vector2d v = svd.matrixV().col(0);
    // (u, v) and (-u, -v) give the same segment traversed from the antipodes;
    // keep t1 in [0, pi).
    double t1 = wrap_two_pi(std::atan2(u(1), u(0)));
    if (t1 >= kPi) {
      u = -u;
      v = -v;
      t1 -= kPi;
    }
    p.t1 = t1;
    p.t2 = wrap_two_pi(std::atan2(v(1), v(0)));
    p.delta = clamped_acos(u.dot(g * v));
  }
  p.foot1 = c1.point(p.t1);
  p.foot2 = c2.point(p.t2);
  return p;
}

TranslationJump translation_length_and_jump(const IsometryS3& m) {
  const double gamma = clamped_acos(m.left.w());
  const double phi = clamped_acos(m.right.w());
  // Conjugation may flip either half-angle independently and the lift sign
  // sends (gamma, phi) to (pi - gamma, pi - phi); these are the invariant
  // combinations.
  TranslationJump out;
  out.delta = std::abs(phi - gamma);
  out.nu = std::min(phi + gamma, kTwoPi - phi - gamma);
  return out;
}

namespace {

// Signed half-angle of m about the unit imaginary axis of ref, m = cos h + sin h U.
double half_angle_about(const SU2Element& m, const SU2Element& ref) {
  const double n = std::sqrt(ref.x() * ref.x() + ref.y() * ref.y() + ref.z() * ref.z());
  if (n < 1e-12) {
    throw DomainError("axial_screw: reference factor is +-id and has no axis");
  }
  const double along = (m.x() * ref.x() + m.y() * ref.y() + m.z() * ref.z()) / n;
  return std::atan2(along, m.w());
}

}  // namespace

ScrewMotion axial_screw(const IsometryS3& m, const IsometryS3& reference) {
  const double left = half_angle_about(m.left, reference.left);
  const double right = half_angle_about(m.right, reference.right);
  return {wrap_two_pi(right - left), wrap_two_pi(right + left)};
}

}  // namespace hopfcone
