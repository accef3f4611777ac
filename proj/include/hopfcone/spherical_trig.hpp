#pragma once

// Base geometry of the two Seifert-fibred examples.
//
// Three-component case: a spherical triangle with vertices (0, 0), (0, phi)
// and (psi, theta) in polar coordinates and angles alpha/2, beta/2, gamma/2.
//
// Four-component case: a Saccheri quadrangle with three right angles and one
// angle alpha/2, side lengths l1 = tau and l2, reflected about the pole into
// a four-fold symmetric quadrangle whose vertices lie at colatitude phi and
// longitudes psi, pi - psi, pi + psi, 2pi - psi.

#include <array>
#include <optional>
#include <string>

#include "hopfcone/hopf.hpp"

namespace hopfcone {

/// Open-domain boundary tolerance for cone-angle parameters.
inline constexpr double kDomainTol = 1e-9;

struct TriangleSolution {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double phi = 0.0;    ///< side from (0,0) to (0,phi), opposite the gamma/2 vertex
  double theta = 0.0;  ///< side from (0,0) to (psi,theta), opposite the beta/2 vertex
  double psi = 0.0;    ///< longitude of the third vertex, alpha/2
};

struct QuadrangleSolution {
  double alpha = 0.0;
  double tau = 0.0;   ///< side length l1, the deformation parameter
  double ell2 = 0.0;  ///< the other side length l2
  double phi = 0.0;   ///< colatitude of the vertices
  double psi = 0.0;   ///< longitude of the first vertex
  double b1 = 0.0;    ///< half the base distance between adjacent vertices A, B
  double b2 = 0.0;    ///< half the base distance between adjacent vertices B, C
};

/// Empty when (alpha, beta, gamma) satisfies the existence inequalities
/// strictly (margin kDomainTol); otherwise names the first violated one.
std::optional<std::string> triangle_violation(double alpha, double beta, double gamma);

/// 2pi - gamma < alpha + beta < 2pi + gamma and
/// -2pi + gamma < alpha - beta < 2pi - gamma, all angles in (0, 2pi).
bool triangle_exists(double alpha, double beta, double gamma);

/// Spherical cosine rules for the triangle with angles alpha/2, beta/2, gamma/2.
/// Throws DomainError outside the existence domain, BranchError if a cosine
/// falls outside [-1, 1] by more than 1e-9.
TriangleSolution solve_triangle(double alpha, double beta, double gamma);

/// Entries of A_l C_l B_l - B_l A_l C_l and C_l B_l A_l - B_l A_l C_l, in the
/// closed form used to derive the triangle; zero exactly at valid holonomy
/// parameters. R5 enters the second difference with a minus sign.
std::array<double, 5> residuals_h3(double alpha, double beta, double gamma, double phi,
                                   double psi, double theta);

/// pi < alpha < 2pi (margin kDomainTol).
bool quadrangle_exists(double alpha);

struct TauInterval {
  double lower = 0.0;  ///< (alpha - pi) / 2
  double upper = 0.0;  ///< pi / 2
};

/// The open interval of admissible tau for a given alpha. Throws DomainError
/// when the quadrangle does not exist.
TauInterval tau_interval(double alpha);

/// Throws DomainError unless alpha admits a quadrangle and tau lies strictly
/// inside tau_interval(alpha); BranchError on a negative radicand beyond 1e-12.
QuadrangleSolution solve_quadrangle(double alpha, double tau);

/// arccos(sqrt(2) cos(alpha/4)), the parameter with l1 = l2.
double symmetric_tau(double alpha);

/// Interior angle at `vertex` of the spherical triangle (vertex, p, q) by the
/// cosine rule.
double triangle_angle(const BasePoint& vertex, const BasePoint& p, const BasePoint& q);

}  // namespace hopfcone
