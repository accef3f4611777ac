#include "hopfcone/holonomy.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfcone {

const char* to_string(ManifoldKind kind) { return kind == ManifoldKind::H3 ? "H3" : "H4"; }

const std::vector<std::vector<int>>& relator_words(ManifoldKind kind) {
  // a = 0, b = 1, c = 2, d = 3
  static const std::vector<std::vector<int>> h3 = {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  static const std::vector<std::vector<int>> h4 = {
      {0, 3, 2, 1}, {1, 0, 3, 2}, {2, 1, 0, 3}, {3, 2, 1, 0}};
  return kind == ManifoldKind::H3 ? h3 : h4;
}

IsometryS3 evaluate_word(const std::vector<IsometryS3>& generators, const std::vector<int>& word) {
  IsometryS3 out;
  for (const int i : word) out = out * generators.at(static_cast<std::size_t>(i));
  return out;
}

namespace {

std::size_t generator_count(ManifoldKind kind) { return kind == ManifoldKind::H3 ? 3 : 4; }

}  // namespace

HolonomyRep make_representation(ManifoldKind kind, std::vector<IsometryS3> generators) {
  if (generators.size() != generator_count(kind)) {
    throw std::invalid_argument("make_representation: wrong number of generators");
  }
  HolonomyRep rep;
  rep.kind = kind;
  rep.generators = std::move(generators);
  rep.central = evaluate_word(rep.generators, relator_words(kind).front());
  return rep;
}

HolonomyRep make_representation(ManifoldKind kind, std::vector<AxisData> axes) {
  std::vector<IsometryS3> gens;
  gens.reserve(axes.size());
  for (const AxisData& ax : axes) gens.push_back(rotation_about_fibre(ax.psi, ax.theta, ax.angle));
  HolonomyRep rep = make_representation(kind, std::move(gens));
  rep.axes = std::move(axes);
  return rep;
}

HolonomyRep build_h3(const TriangleSolution& t) {
  HolonomyRep rep = make_representation(
      ManifoldKind::H3, std::vector<AxisData>{{0.0, 0.0, t.alpha},
                                              {0.0, t.phi, t.beta},
                                              {t.psi, t.theta, t.gamma}});
  rep.cone_data = t;
  return rep;
}

HolonomyRep build_h3(double alpha, double beta, double gamma) {
  return build_h3(solve_triangle(alpha, beta, gamma));
}

HolonomyRep build_h4(const QuadrangleSolution& q) {
  const double a = q.alpha;
  HolonomyRep rep = make_representation(
      ManifoldKind::H4, std::vector<AxisData>{{q.psi, q.phi, a},
                                              {kPi - q.psi, q.phi, a},
                                              {kPi + q.psi, q.phi, a},
                                              {kTwoPi - q.psi, q.phi, a}});
  rep.cone_data = q;
  return rep;
}

HolonomyRep build_h4(double alpha, double tau) { return build_h4(solve_quadrangle(alpha, tau)); }

double relation_residual(const HolonomyRep& rep) {
  const auto& words = relator_words(rep.kind);
  double worst = 0.0;
  IsometryS3 prev = evaluate_word(rep.generators, words.front());
  for (std::size_t i = 1; i < words.size(); ++i) {
    const IsometryS3 next = evaluate_word(rep.generators, words[i]);
    worst = std::max(worst, isometry_lift_distance(prev, next));
    prev = next;
  }
  return worst;
}

double centrality_residual(const HolonomyRep& rep) {
  double worst = 0.0;
  for (const IsometryS3& g : rep.generators) {
    worst = std::max({worst, commutator_norm(rep.central.left, g.left),
                      commutator_norm(rep.central.right, g.right)});
  }
  return worst;
}

double right_factor_commutation(const HolonomyRep& rep) {
  double worst = 0.0;
  for (std::size_t i = 0; i < rep.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      worst = std::max(worst, commutator_norm(rep.generators[i].right, rep.generators[j].right));
    }
  }
  return worst;
}

std::vector<BasePoint> axis_base_points(const HolonomyRep& rep) {
  std::vector<BasePoint> out;
  out.reserve(rep.generators.size());
  for (const IsometryS3& g : rep.generators) out.push_back(axis_base_point(g));
  return out;
}

std::vector<AxisPerpendicular> axis_perpendiculars(const HolonomyRep& rep) {
  const std::vector<BasePoint> bases = axis_base_points(rep);
  std::vector<AxisPerpendicular> out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      const Perpendicular p = common_perpendicular(fibre_over(bases[i]), fibre_over(bases[j]));
      out.push_back({static_cast<int>(i), static_cast<int>(j), p.delta});
    }
  }
  return out;
}

TriangleSplit triangle_split_check(double alpha, double tau) {
  const QuadrangleSolution q = solve_quadrangle(alpha, tau);
  const double lon[4] = {q.psi, kPi - q.psi, kPi + q.psi, kTwoPi - q.psi};
  const BasePoint a = BasePoint::polar(lon[0], q.phi);
  const BasePoint b = BasePoint::polar(lon[1], q.phi);
  const BasePoint c = BasePoint::polar(lon[2], q.phi);
  const BasePoint d = BasePoint::polar(lon[3], q.phi);

  TriangleSplit s;
  s.beta1 = triangle_angle(b, c, d);
  s.delta2 = triangle_angle(d, b, c);
  s.beta2 = triangle_angle(b, a, d);
  s.delta1 = triangle_angle(d, a, b);

  const auto left = [&](int vertex, double angle) {
    return rotation_about_fibre(lon[vertex], q.phi, angle).left;
  };
  const SU2Element a_l = left(0, alpha);
  const SU2Element c_l = left(2, alpha);
  const SU2Element b1 = left(1, 2.0 * s.beta1);
  const SU2Element b2 = left(1, 2.0 * s.beta2);
  const SU2Element d1 = left(3, 2.0 * s.delta1);
  const SU2Element d2 = left(3, 2.0 * s.delta2);
  const SU2Element minus_id = -SU2Element::identity();

  s.r1 = matrix_max_diff(d2 * c_l * b1, minus_id);
  s.r2 = matrix_max_diff(a_l * d1 * b2, minus_id);
  s.product = matrix_max_diff(a_l * d1 * d2 * c_l * b1 * b2, SU2Element::identity());
  return s;
}

}  // namespace hopfcone
