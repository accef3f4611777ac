#pragma once

// Geometric invariants of the cone-manifolds H_3(alpha, beta, gamma) and
// H_4(alpha; tau): singular lengths, volumes, and the experiments that
// evidence rigidity of the first and flexibility of the second.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hopfcone/holonomy.hpp"

namespace hopfcone {

/// (alpha + beta + gamma)/2 - pi. Throws DomainError outside the domain.
double h3_length(double alpha, double beta, double gamma);

/// (1/2) h3_length^2.
double h3_volume(double alpha, double beta, double gamma);

/// 2 (alpha - pi), for pi < alpha < 2pi.
double h4_length(double alpha);

/// 2 (alpha - pi)^2.
double h4_volume(double alpha);

/// Length of each singular component read off the holonomy: the translation
/// of the central element along the axis of that component's meridian.
std::vector<double> singular_lengths(const HolonomyRep& rep);

struct GeometryReport {
  ManifoldKind kind = ManifoldKind::H3;
  std::vector<double> cone_angles;
  std::optional<double> tau;
  std::vector<double> lengths;      ///< from holonomy, one per component
  double length_closed_form = 0.0;
  double volume = 0.0;              ///< closed form
  double holonomy_residual = 0.0;
  double centrality_residual = 0.0;
  double trace_central_left = 0.0;
  double trace_central_right = 0.0;
  TranslationJump central_folded;   ///< trace-only translation length and jump of h
  std::vector<AxisPerpendicular> perpendiculars;
  std::variant<TriangleSolution, QuadrangleSolution> base;
};

GeometryReport h3_report(double alpha, double beta, double gamma);
GeometryReport h4_report(double alpha, double tau);

/// Integrates 2 dVol = sum_i l_i d(alpha_i) along the straight segment
/// from -> to in cone-angle space with composite Simpson (steps even, >= 2).
/// Lengths come from the holonomy at each node; nodes on the degeneration
/// locus (alpha + beta + gamma = 2pi, resp. alpha = pi) contribute zero.
/// `from`/`to` hold (alpha, beta, gamma) for H3 and (alpha) for H4; the H4
/// path uses tau = symmetric_tau(alpha) at every node.
double schlafli_integrate(ManifoldKind kind, std::span<const double> from,
                          std::span<const double> to, int steps);

/// The degeneration-locus point the Schlafli path starts from: the radial
/// projection onto alpha + beta + gamma = 2pi (H3) or alpha = pi (H4).
std::vector<double> schlafli_anchor(ManifoldKind kind, std::span<const double> target);

/// Volume from the degeneration locus (Vol = 0 there) to an admissible target.
double schlafli_volume(ManifoldKind kind, std::span<const double> target, int steps = 10000);

struct SchlafliCheck {
  double volume = 0.0;
  double refined = 0.0;  ///< at twice the steps
  bool converged = false;  ///< |volume - refined| <= 1e-9
};

SchlafliCheck schlafli_check(ManifoldKind kind, std::span<const double> target, int steps = 10000);

struct SweepRow {
  double tau = 0.0;
  double ell2 = 0.0;
  double residual = 0.0;
  double b1 = 0.0;   ///< perpendicular between axes a, b
  double b2 = 0.0;   ///< perpendicular between axes b, c
  double phi = 0.0;  ///< perpendicular between axes a, c
  double delta_h = 0.0;
  bool symmetric = false;        ///< the row at symmetric_tau(alpha)
  bool near_degenerate = false;  ///< tau within 1e-3 of an end of its interval
};

SweepRow sweep_row(double alpha, double tau);

/// Sorted tau-grid containing symmetric_tau(alpha), with the remaining
/// n - 1 samples spread uniformly over the interior of the two sub-intervals
/// on either side of it. Throws std::invalid_argument for n < 3.
std::vector<double> sweep_grid(double alpha, int n_samples);

std::vector<SweepRow> flexibility_sweep(double alpha, int n_samples);

enum class ScanBranch {
  Primary,  ///< psi = alpha/2
  Shifted,  ///< psi = alpha/2 + pi: triangle with angles pi - alpha/2, ...
  Other,
};

const char* to_string(ScanBranch branch);

struct ScanSolution {
  double phi = 0.0;
  double psi = 0.0;
  double theta = 0.0;
  double residual = 0.0;  ///< max |R_k|
  ScanBranch branch = ScanBranch::Other;
};

struct RigidityScan {
  std::vector<ScanSolution> solutions;  ///< sorted by (psi, phi, theta)
  int candidate_cells = 0;   ///< grid cells where every R_k changes sign
  int degenerate = 0;        ///< converged to coincident axes (sin phi or sin theta ~ 0)
  int unconverged = 0;

  /// Distinct solutions on the psi = alpha/2 branch.
  int geometric_count() const;
};

/// Exhaustive search for zeros of residuals_h3 over
/// (phi, psi, theta) in [0, pi] x [0, 2pi) x [0, pi]: a resolution^3 grid,
/// damped Gauss-Newton refinement from every cell in which all five
/// residuals change sign, deduplication at radius 1e-6. Zeros with
/// coincident axes (abelian representations) are counted and dropped.
RigidityScan rigidity_scan(double alpha, double beta, double gamma, int resolution = 200);

}  // namespace hopfcone
