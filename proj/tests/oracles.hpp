#pragma once

// Independent reference computations. None of these call into the library's
// geometry code: points are plain 4-vectors, matrices are built by hand, and
// searches are brute force.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

using Vec4 = std::array<double, 4>;
using Cplx = std::complex<double>;
using Mat2 = std::array<std::array<Cplx, 2>, 2>;

inline Mat2 to_matrix(const Vec4& q) {
  const Cplx i(0.0, 1.0);
  return {{{q[0] + i * q[1], q[2] + i * q[3]}, {-q[2] + i * q[3], q[0] - i * q[1]}}};
}

inline Vec4 from_matrix(const Mat2& m) {
  return {m[0][0].real(), m[0][0].imag(), m[0][1].real(), m[0][1].imag()};
}

inline Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int r = 0; r < 2; ++r)
    for (int k = 0; k < 2; ++k) c[r][k] = a[r][0] * b[0][k] + a[r][1] * b[1][k];
  return c;
}

inline Mat2 transpose(const Mat2& a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }

inline Mat2 conjugate(const Mat2& a) {
  return {{{std::conj(a[0][0]), std::conj(a[0][1])}, {std::conj(a[1][0]), std::conj(a[1][1])}}};
}

/// P -> A^t P conj(B) on 2x2 complex matrices.
inline Vec4 act(const Vec4& left, const Vec4& right, const Vec4& p) {
  return from_matrix(mul(mul(transpose(to_matrix(left)), to_matrix(p)), conjugate(to_matrix(right))));
}

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double sphere_distance(const Vec4& a, const Vec4& b) {
  return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

/// The 4x4 real matrix of P -> A^t P conj(B) in the basis (1, i, j, k).
inline Eigen::Matrix4d so4_matrix(const Vec4& left, const Vec4& right) {
  Eigen::Matrix4d m;
  for (int c = 0; c < 4; ++c) {
    Vec4 e{0, 0, 0, 0};
    e[c] = 1.0;
    const Vec4 img = act(left, right, e);
    for (int r = 0; r < 4; ++r) m(r, c) = img[r];
  }
  return m;
}

/// Rotation angles in [0, pi] of an SO(4) matrix, sorted ascending.
inline std::array<double, 2> so4_angles(const Eigen::Matrix4d& m) {
  Eigen::EigenSolver<Eigen::Matrix4d> es(m, false);
  std::vector<double> angles;
  for (int i = 0; i < 4; ++i) angles.push_back(std::abs(std::arg(es.eigenvalues()[i])));
  std::sort(angles.begin(), angles.end());
  return {angles[0], angles[2]};
}

/// Point of a great circle s cos t + v sin t.
inline Vec4 circle_point(const Vec4& s, const Vec4& v, double t) {
  const double c = std::cos(t), sn = std::sin(t);
  return {s[0] * c + v[0] * sn, s[1] * c + v[1] * sn, s[2] * c + v[2] * sn, s[3] * c + v[3] * sn};
}

/// Minimum distance between two great circles: a 2000 x 2000 parameter grid
/// followed by alternating golden-section descent on each parameter.
inline double brute_force_circle_distance(const Vec4& s1, const Vec4& v1, const Vec4& s2,
                                          const Vec4& v2, int grid = 2000) {
  // Maximizing the dot product is equivalent and cheaper than acos per node.
  const double h = 2.0 * kPi / grid;
  std::vector<Vec4> b(static_cast<std::size_t>(grid));
  for (int j = 0; j < grid; ++j) b[static_cast<std::size_t>(j)] = circle_point(s2, v2, j * h);
  double best = -2.0, bt1 = 0.0, bt2 = 0.0;
  for (int i = 0; i < grid; ++i) {
    const Vec4 a = circle_point(s1, v1, i * h);
    for (int j = 0; j < grid; ++j) {
      const double d = dot(a, b[static_cast<std::size_t>(j)]);
      if (d > best) {
        best = d;
        bt1 = i * h;
        bt2 = j * h;
      }
    }
  }
  const auto f = [&](double t1, double t2) {
    return dot(circle_point(s1, v1, t1), circle_point(s2, v2, t2));
  };
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  const auto golden = [&](auto&& objective, double centre, double radius) {
    double lo = centre - radius, hi = centre + radius;
    for (int it = 0; it < 200; ++it) {
      const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
      if (objective(m1) > objective(m2)) hi = m2;
      else lo = m1;
    }
    return 0.5 * (lo + hi);
  };
  for (int sweep = 0; sweep < 50; ++sweep) {
    bt1 = golden([&](double t) { return f(t, bt2); }, bt1, 2.0 * h);
    bt2 = golden([&](double t) { return f(bt1, t); }, bt2, 2.0 * h);
  }
  // acos loses half the digits near 1; use the chord instead.
  const Vec4 a = circle_point(s1, v1, bt1), c = circle_point(s2, v2, bt2);
  double chord2 = 0.0;
  for (int k = 0; k < 4; ++k) chord2 += (a[k] - c[k]) * (a[k] - c[k]);
  return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
}

using Vec3 = std::array<double, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Vec3 normalized(const Vec3& a) {
  const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  return {a[0] / n, a[1] / n, a[2] / n};
}

inline double arc(const Vec3& a, const Vec3& b) {
  return std::atan2(std::sqrt([&] {
                      const Vec3 c = cross(a, b);
                      return c[0] * c[0] + c[1] * c[1] + c[2] * c[2];
                    }()),
                    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

struct TriangleSides {
  double a, b, c;  ///< sides opposite the angles A, B, C
};

/// Sides of the spherical triangle with angles A, B, C, built through its
/// polar triangle: the polar triangle has sides pi - A, pi - B, pi - C, is
/// laid out explicitly in R^3, and the original vertices are the normalized
/// cross products of its vertex pairs.
inline TriangleSides sides_from_angles(double A, double B, double C) {
  const double pa = kPi - A, pb = kPi - B, pc = kPi - C;
  // Polar triangle vertices P, Q, R with |QR| = pa, |PR| = pb, |PQ| = pc.
  const Vec3 p{0.0, 0.0, 1.0};
  const Vec3 q{std::sin(pc), 0.0, std::cos(pc)};
  // Angle at P from the law of cosines for sides.
  const double cos_p = (std::cos(pa) - std::cos(pb) * std::cos(pc)) / (std::sin(pb) * std::sin(pc));
  const double ang = std::acos(std::clamp(cos_p, -1.0, 1.0));
  const Vec3 r{std::sin(pb) * std::cos(ang), std::sin(pb) * std::sin(ang), std::cos(pb)};
  // Vertices of the original triangle, oriented to lie on the same side.
  Vec3 va = normalized(cross(q, r)), vb = normalized(cross(r, p)), vc = normalized(cross(p, q));
  return {arc(vb, vc), arc(va, vc), arc(va, vb)};
}

}  // namespace oracle
