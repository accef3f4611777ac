#pragma once

// Lifted holonomy representations into SU(2) x SU(2) for the Hopf links H_3
// and H_4, with relation diagnostics.
//
// Link groups (generators are meridians, h is the class of a regular fibre):
//   H_3:  < a, b, c, h | acb = bac = cba = h,  h central >
//   H_4:  < a, b, c, d, h | adcb = badc = cbad = dcba = h,  h central >
// Words are evaluated as factorwise matrix products in the order written.

#include <string>
#include <variant>
#include <vector>

#include "hopfcone/hopf.hpp"
#include "hopfcone/spherical_trig.hpp"
#include "hopfcone/su2.hpp"

namespace hopfcone {

enum class ManifoldKind { H3, H4 };

const char* to_string(ManifoldKind kind);

struct AxisData {
  double psi = 0.0;    ///< longitude of the axis base point
  double theta = 0.0;  ///< colatitude of the axis base point
  double angle = 0.0;  ///< rotation (cone) angle
};

struct HolonomyRep {
  ManifoldKind kind = ManifoldKind::H3;
  std::vector<IsometryS3> generators;  ///< images of a, b, c[, d]
  IsometryS3 central;                  ///< image of h, from the first relator word
  std::vector<AxisData> axes;          ///< axis data used to build each generator
  std::variant<std::monostate, TriangleSolution, QuadrangleSolution> cone_data;
};

/// Relator words as generator indices; the first word defines h.
const std::vector<std::vector<int>>& relator_words(ManifoldKind kind);

/// Product of generators along a word.
IsometryS3 evaluate_word(const std::vector<IsometryS3>& generators, const std::vector<int>& word);

/// Generators are rotations about Hopf fibres; the central element is the
/// first relator word. Throws std::invalid_argument on a wrong generator count.
HolonomyRep make_representation(ManifoldKind kind, std::vector<AxisData> axes);

/// Representation with arbitrary generator images (e.g. the trivial one).
HolonomyRep make_representation(ManifoldKind kind, std::vector<IsometryS3> generators);

/// A = <R(alpha), R(alpha)>, B about the fibre over (0, phi) through beta,
/// C about the fibre over (psi, theta) through gamma, from solve_triangle.
HolonomyRep build_h3(double alpha, double beta, double gamma);

/// build_h3 from explicit triangle parameters (not re-solved).
HolonomyRep build_h3(const TriangleSolution& triangle);

/// Four rotations through alpha about the fibres over the quadrangle
/// vertices (psi, phi), (pi - psi, phi), (pi + psi, phi), (2pi - psi, phi).
HolonomyRep build_h4(double alpha, double tau);

HolonomyRep build_h4(const QuadrangleSolution& quadrangle);

/// Max over consecutive relator words and both factors of the entrywise
/// max-norm of the difference, minimized over the lift sign <-id, -id>.
double relation_residual(const HolonomyRep& rep);

/// Max commutator norm between the central element and each generator.
double centrality_residual(const HolonomyRep& rep);

/// Max commutator norm among all pairs of right factors.
double right_factor_commutation(const HolonomyRep& rep);

/// Base point of each generator's axis recovered from its left factor.
std::vector<BasePoint> axis_base_points(const HolonomyRep& rep);

struct AxisPerpendicular {
  int first = 0;
  int second = 0;
  double length = 0.0;  ///< common perpendicular of the two axis fibres
};

/// Common perpendicular lengths between all pairs of generator axes,
/// measured on the actual fibres in S^3.
std::vector<AxisPerpendicular> axis_perpendiculars(const HolonomyRep& rep);

struct TriangleSplit {
  double beta1 = 0.0;   ///< angle at B in triangle BCD
  double beta2 = 0.0;   ///< angle at B in triangle ABD
  double delta1 = 0.0;  ///< angle at D in triangle ABD
  double delta2 = 0.0;  ///< angle at D in triangle BCD
  double r1 = 0.0;      ///< || D''_l C_l B'_l + id ||
  double r2 = 0.0;      ///< || A_l D'_l B''_l + id ||
  double product = 0.0; ///< || A_l D'_l D''_l C_l B'_l B''_l - id ||
};

/// Splits the H_4 base quadrangle along the diagonal BD and checks that the
/// rotations about the vertices of each sub-triangle multiply to -id. The
/// rotation at a vertex with triangle angle x is through 2x.
TriangleSplit triangle_split_check(double alpha, double tau);

}  // namespace hopfcone
