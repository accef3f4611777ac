#include "hopfcone/spherical_trig.hpp"

#include <algorithm>
#include <cstdio>

#include "hopfcone/diagnostics.hpp"
#include "hopfcone/errors.hpp"

namespace hopfcone {

namespace {

std::string format_violation(const char* what, double lhs, double rhs) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (%.17g vs %.17g)", what, lhs, rhs);
  return buf;
}

// acos with a hard failure beyond tol and a clamp within it.
double checked_acos(double c, const char* what, double tol = 1e-9) {
  if (!(std::abs(c) <= 1.0 + tol)) {
    throw BranchError(std::string(what) + ": cosine outside [-1, 1]");
  }
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

std::optional<std::string> triangle_violation(double alpha, double beta, double gamma) {
  for (const double a : {alpha, beta, gamma}) {
    if (!(a > kDomainTol && a < kTwoPi - kDomainTol)) {
      return format_violation("cone angle must lie in (0, 2pi)", a, kTwoPi);
    }
  }
  if (!(alpha + beta > kTwoPi - gamma + kDomainTol)) {
    return format_violation("2pi - gamma < alpha + beta", kTwoPi - gamma, alpha + beta);
  }
  if (!(alpha + beta < kTwoPi + gamma - kDomainTol)) {
    return format_violation("alpha + beta < 2pi + gamma", alpha + beta, kTwoPi + gamma);
  }
  if (!(alpha - beta > -kTwoPi + gamma + kDomainTol)) {
    return format_violation("-2pi + gamma < alpha - beta", -kTwoPi + gamma, alpha - beta);
  }
  if (!(alpha - beta < kTwoPi - gamma - kDomainTol)) {
    return format_violation("alpha - beta < 2pi - gamma", alpha - beta, kTwoPi - gamma);
  }
  return std::nullopt;
}

bool triangle_exists(double alpha, double beta, double gamma) {
  return !triangle_violation(alpha, beta, gamma).has_value();
}

TriangleSolution solve_triangle(double alpha, double beta, double gamma) {
  if (auto v = triangle_violation(alpha, beta, gamma)) {
    throw DomainError("no spherical triangle: " + *v);
  }
  const double ca = std::cos(0.5 * alpha), sa = std::sin(0.5 * alpha);
  const double cb = std::cos(0.5 * beta), sb = std::sin(0.5 * beta);
  const double cg = std::cos(0.5 * gamma), sg = std::sin(0.5 * gamma);

  TriangleSolution s;
  s.alpha = alpha;
  s.beta = beta;
  s.gamma = gamma;
  s.phi = checked_acos((cg + ca * cb) / (sa * sb), "solve_triangle: phi");
  s.theta = checked_acos((cb + ca * cg) / (sa * sg), "solve_triangle: theta");
  s.psi = 0.5 * alpha;
  return s;
}

std::array<double, 5> residuals_h3(double alpha, double beta, double gamma, double phi,
                                   double psi, double theta) {
  const double sa = std::sin(0.5 * alpha), ca = std::cos(0.5 * alpha);
  const double sb = std::sin(0.5 * beta), cb = std::cos(0.5 * beta);
  const double sg = std::sin(0.5 * gamma), cg = std::cos(0.5 * gamma);
  const double sph = std::sin(phi), cph = std::cos(phi);
  const double sth = std::sin(theta), cth = std::cos(theta);
  const double sps = std::sin(psi), cps = std::cos(psi);
  const double sd = std::sin(0.5 * alpha - psi), cd = std::cos(0.5 * alpha - psi);

  return {
      2.0 * sb * sg * sth * cph * sd,
      2.0 * sb * (cg * sa * sph + sg * (-cph * cd * sth + ca * cth * sph)),
      -2.0 * sb * sg * sth * sph * sd,
      2.0 * sg * (cth * sa * sb * sph - (cb * sa + ca * sb * cph) * sth * sps),
      2.0 * sg * (cb * cps * sa * sth + ca * sb * (cph * cps * sth - cth * sph)),
  };
}

bool quadrangle_exists(double alpha) {
  return alpha > kPi + kDomainTol && alpha < kTwoPi - kDomainTol;
}

TauInterval tau_interval(double alpha) {
  if (!quadrangle_exists(alpha)) {
    throw DomainError(format_violation("quadrangle needs pi < alpha < 2pi", alpha, kPi));
  }
  return {0.5 * (alpha - kPi), 0.5 * kPi};
}

QuadrangleSolution solve_quadrangle(double alpha, double tau) {
  const TauInterval range = tau_interval(alpha);
  if (!(tau > range.lower + kDomainTol && tau < range.upper - kDomainTol)) {
    throw DomainError(format_violation("tau must lie in ((alpha - pi)/2, pi/2)", tau, range.lower));
  }

  const double half = 0.5 * alpha;
  const double minus_cos_half = -std::cos(half);  // > 0 on the domain
  const double cot_half = std::cos(half) / std::sin(half);
  const double st = std::sin(tau), ct = std::cos(tau);
  const double cot_tau = ct / st;
  const double k2c2 = cot_half * cot_half * cot_tau * cot_tau;

  double radicand = 1.0 - k2c2;
  if (radicand < -1e-12) {
    throw BranchError("solve_quadrangle: negative radicand");
  }
  radicand = std::max(radicand, 0.0);
  const double root = std::sqrt(radicand);

  QuadrangleSolution q;
  q.alpha = alpha;
  q.tau = tau;
  // sin l2 = -cos(alpha/2) / sin tau, cos l2 = sqrt(sin^2 tau - cos^2(alpha/2)) / sin tau.
  const double cos_l2_scaled = std::sqrt(std::max((st - minus_cos_half) * (st + minus_cos_half), 0.0));
  q.ell2 = std::atan2(minus_cos_half, cos_l2_scaled);

  const double cos_phi = ct * root;
  q.phi = clamped_acos(cos_phi);
  q.psi = clamped_acos(std::sqrt(radicand / (1.0 + k2c2 * cot_tau * cot_tau)));
  q.b1 = clamped_acos(cos_phi * st / cos_l2_scaled);
  q.b2 = clamped_acos(root);
  return q;
}

double symmetric_tau(double alpha) {
  if (!quadrangle_exists(alpha)) {
    throw DomainError(format_violation("symmetric tau needs pi < alpha < 2pi", alpha, kPi));
  }
  return clamped_acos(std::sqrt(2.0) * std::cos(0.25 * alpha));
}

double triangle_angle(const BasePoint& vertex, const BasePoint& p, const BasePoint& q) {
  const double a = base_distance(p, q);
  const double b = base_distance(vertex, p);
  const double c = base_distance(vertex, q);
  return clamped_acos((std::cos(a) - std::cos(b) * std::cos(c)) / (std::sin(b) * std::sin(c)));
}

}  // namespace hopfcone
