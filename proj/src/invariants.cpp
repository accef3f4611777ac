#include "hopfcone/invariants.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "hopfcone/errors.hpp"

namespace hopfcone {

double h3_length(double alpha, double beta, double gamma) {
  if (auto v = triangle_violation(alpha, beta, gamma)) {
    throw DomainError("H3 cone angles outside the admissible domain: " + *v);
  }
  return 0.5 * (alpha + beta + gamma) - kPi;
}

double h3_volume(double alpha, double beta, double gamma) {
  const double l = h3_length(alpha, beta, gamma);
  return 0.5 * l * l;
}

double h4_length(double alpha) {
  if (!quadrangle_exists(alpha)) {
    throw DomainError("H4 cone angle must satisfy pi < alpha < 2pi");
  }
  return 2.0 * (alpha - kPi);
}

double h4_volume(double alpha) {
  const double l = h4_length(alpha);
  return 0.5 * l * l;
}

std::vector<double> singular_lengths(const HolonomyRep& rep) {
  std::vector<double> out;
  out.reserve(rep.generators.size());
  for (const IsometryS3& g : rep.generators) out.push_back(axial_screw(rep.central, g).translation);
  return out;
}

namespace {

GeometryReport common_report(const HolonomyRep& rep) {
  GeometryReport r;
  r.kind = rep.kind;
  for (const AxisData& ax : rep.axes) r.cone_angles.push_back(ax.angle);
  r.lengths = singular_lengths(rep);
  r.holonomy_residual = relation_residual(rep);
  r.centrality_residual = centrality_residual(rep);
  r.trace_central_left = rep.central.left.trace();
  r.trace_central_right = rep.central.right.trace();
  r.central_folded = translation_length_and_jump(rep.central);
  r.perpendiculars = axis_perpendiculars(rep);
  return r;
}

}  // namespace

GeometryReport h3_report(double alpha, double beta, double gamma) {
  const TriangleSolution t = solve_triangle(alpha, beta, gamma);
  GeometryReport r = common_report(build_h3(t));
  r.cone_angles = {alpha, beta, gamma};
  r.length_closed_form = h3_length(alpha, beta, gamma);
  r.volume = h3_volume(alpha, beta, gamma);
  r.base = t;
  return r;
}

GeometryReport h4_report(double alpha, double tau) {
  const QuadrangleSolution q = solve_quadrangle(alpha, tau);
  GeometryReport r = common_report(build_h4(q));
  r.tau = tau;
  r.length_closed_form = h4_length(alpha);
  r.volume = h4_volume(alpha);
  r.base = q;
  return r;
}

namespace {

std::size_t angle_count(ManifoldKind kind) { return kind == ManifoldKind::H3 ? 3 : 1; }

void check_dimension(ManifoldKind kind, std::span<const double> point) {
  if (point.size() != angle_count(kind)) {
    throw std::invalid_argument("Schlafli: wrong number of cone angles");
  }
}

// Singular lengths at a node of the path, zero on the degeneration locus.
std::vector<double> node_lengths(ManifoldKind kind, std::span<const double> angles) {
  if (kind == ManifoldKind::H3) {
    const double sum = angles[0] + angles[1] + angles[2];
    if (std::abs(sum - kTwoPi) <= kDomainTol) return {0.0, 0.0, 0.0};
    return singular_lengths(build_h3(angles[0], angles[1], angles[2]));
  }
  const double alpha = angles[0];
  if (std::abs(alpha - kPi) <= kDomainTol) return {0.0, 0.0, 0.0, 0.0};
  return singular_lengths(build_h4(alpha, symmetric_tau(alpha)));
}

bool on_locus(ManifoldKind kind, std::span<const double> angles) {
  if (kind == ManifoldKind::H3) {
    return std::abs(angles[0] + angles[1] + angles[2] - kTwoPi) <= kDomainTol;
  }
  return std::abs(angles[0] - kPi) <= kDomainTol;
}

bool admissible(ManifoldKind kind, std::span<const double> angles) {
  return kind == ManifoldKind::H3 ? triangle_exists(angles[0], angles[1], angles[2])
                                  : quadrangle_exists(angles[0]);
}

}  // namespace

double schlafli_integrate(ManifoldKind kind, std::span<const double> from,
                          std::span<const double> to, int steps) {
  check_dimension(kind, from);
  check_dimension(kind, to);
  if (steps < 2 || steps % 2 != 0) {
    throw std::invalid_argument("Schlafli: steps must be even and >= 2");
  }
  if (std::equal(from.begin(), from.end(), to.begin())) return 0.0;
  for (const auto endpoint : {from, to}) {
    if (!on_locus(kind, endpoint) && !admissible(kind, endpoint)) {
      throw DomainError("Schlafli path endpoint outside the admissible domain");
    }
  }

  const std::size_t n = from.size();
  std::vector<double> direction(n);
  for (std::size_t i = 0; i < n; ++i) direction[i] = to[i] - from[i];

  std::vector<double> node(n);
  const auto integrand = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) node[i] = from[i] + t * direction[i];
    const std::vector<double> lengths = node_lengths(kind, node);
    double rate = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      rate += lengths[i] * direction[kind == ManifoldKind::H3 ? i : 0];
    }
    return 0.5 * rate;
  };

  const double h = 1.0 / steps;
  double sum = integrand(0.0) + integrand(1.0);
  try {
    for (int k = 1; k < steps; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * integrand(k * h);
  } catch (const DomainError& e) {
    throw DomainError(std::string("Schlafli path leaves the admissible domain: ") + e.what());
  }
  return sum * h / 3.0;
}

std::vector<double> schlafli_anchor(ManifoldKind kind, std::span<const double> target) {
  check_dimension(kind, target);
  if (!admissible(kind, target)) {
    throw DomainError("Schlafli target outside the admissible domain");
  }
  if (kind == ManifoldKind::H4) return {kPi};
  const double scale = kTwoPi / (target[0] + target[1] + target[2]);
  return {target[0] * scale, target[1] * scale, target[2] * scale};
}

double schlafli_volume(ManifoldKind kind, std::span<const double> target, int steps) {
  const std::vector<double> anchor = schlafli_anchor(kind, target);
  return schlafli_integrate(kind, anchor, target, steps);
}

SchlafliCheck schlafli_check(ManifoldKind kind, std::span<const double> target, int steps) {
  SchlafliCheck c;
  c.volume = schlafli_volume(kind, target, steps);
  c.refined = schlafli_volume(kind, target, 2 * steps);
  c.converged = std::abs(c.volume - c.refined) <= 1e-9;
  return c;
}

SweepRow sweep_row(double alpha, double tau) {
  const QuadrangleSolution q = solve_quadrangle(alpha, tau);
  const HolonomyRep rep = build_h4(q);
  SweepRow row;
  row.tau = tau;
  row.ell2 = q.ell2;
  row.residual = relation_residual(rep);
  for (const AxisPerpendicular& p : axis_perpendiculars(rep)) {
    if (p.first == 0 && p.second == 1) row.b1 = p.length;
    if (p.first == 1 && p.second == 2) row.b2 = p.length;
    if (p.first == 0 && p.second == 2) row.phi = p.length;
  }
  row.delta_h = singular_lengths(rep).front();
  row.symmetric = std::abs(tau - symmetric_tau(alpha)) <= 1e-12;
  const TauInterval range = tau_interval(alpha);
  row.near_degenerate = std::min(tau - range.lower, range.upper - tau) < 1e-3;
  return row;
}

std::vector<double> sweep_grid(double alpha, int n_samples) {
  if (n_samples < 3) throw std::invalid_argument("flexibility sweep needs at least 3 samples");
  const TauInterval range = tau_interval(alpha);
  const double mid = symmetric_tau(alpha);
  const int below = (n_samples - 1) / 2;
  const int above = n_samples - 1 - below;

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 1; k <= below; ++k) {
    grid.push_back(range.lower + k * (mid - range.lower) / (below + 1));
  }
  grid.push_back(mid);
  for (int k = 1; k <= above; ++k) {
    grid.push_back(mid + k * (range.upper - mid) / (above + 1));
  }
  return grid;
}

std::vector<SweepRow> flexibility_sweep(double alpha, int n_samples) {
  std::vector<SweepRow> rows;
  for (const double tau : sweep_grid(alpha, n_samples)) rows.push_back(sweep_row(alpha, tau));
  return rows;
}

const char* to_string(ScanBranch branch) {
  switch (branch) {
    case ScanBranch::Primary: return "primary";
    case ScanBranch::Shifted: return "shifted";
    case ScanBranch::Other: return "other";
  }
  return "other";
}

int RigidityScan::geometric_count() const {
  return static_cast<int>(std::count_if(solutions.begin(), solutions.end(), [](const ScanSolution& s) {
    return s.branch == ScanBranch::Primary;
  }));
}

namespace {

using Residual = Eigen::Matrix<double, 5, 1>;
using Params = Eigen::Vector3d;

struct ResidualSystem {
  double alpha, beta, gamma;

  Residual operator()(const Params& p) const {
    const auto r = residuals_h3(alpha, beta, gamma, p(0), p(1), p(2));
    return Residual(r.data());
  }
};

// Residual tables on one phi-slab of the grid, indexed [k][j * (n + 1) + l]
// for psi-node j and theta-node l.
struct Slab {
  std::array<std::vector<double>, 5> r;
};

void fill_slab(Slab& slab, const ResidualSystem& sys, double phi, const std::vector<double>& psi,
               const std::vector<double>& theta) {
  for (auto& v : slab.r) v.resize(psi.size() * theta.size());
  for (std::size_t j = 0; j < psi.size(); ++j) {
    for (std::size_t l = 0; l < theta.size(); ++l) {
      const auto r = residuals_h3(sys.alpha, sys.beta, sys.gamma, phi, psi[j], theta[l]);
      for (std::size_t k = 0; k < 5; ++k) slab.r[k][j * theta.size() + l] = r[k];
    }
  }
}

Params project(Params p) {
  p(0) = std::clamp(p(0), 0.0, kPi);
  p(1) = wrap_two_pi(p(1));
  p(2) = std::clamp(p(2), 0.0, kPi);
  return p;
}

// Damped Gauss-Newton with a central-difference Jacobian, kept inside the box.
std::optional<Params> refine(const ResidualSystem& sys, Params p) {
  constexpr double kStep = 1e-7;
  double lambda = 1e-6;
  Residual r = sys(p);
  for (int iter = 0; iter < 200 && r.cwiseAbs().maxCoeff() > 1e-15; ++iter) {
    Eigen::Matrix<double, 5, 3> jac;
    for (int c = 0; c < 3; ++c) {
      Params hi = p, lo = p;
      hi(c) += kStep;
      lo(c) -= kStep;
      jac.col(c) = (sys(hi) - sys(lo)) / (2.0 * kStep);
    }
    const Eigen::Matrix3d jtj = jac.transpose() * jac;
    const Eigen::Vector3d grad = jac.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 20 && !improved; ++tries) {
      Eigen::Matrix3d damped = jtj;
      damped.diagonal().array() += lambda * (1.0 + jtj.diagonal().array());
      const Params cand = project(p - damped.ldlt().solve(grad));
      const Residual rc = sys(cand);
      if (rc.squaredNorm() < r.squaredNorm()) {
        const double moved = (cand - p).cwiseAbs().maxCoeff();
        p = cand;
        r = rc;
        lambda = std::max(lambda * 0.1, 1e-15);
        improved = true;
        if (moved < 1e-16) iter = 1 << 20;
      } else {
        lambda *= 10.0;
      }
    }
    if (!improved) break;
  }
  if (r.cwiseAbs().maxCoeff() > 1e-10) return std::nullopt;
  return p;
}

double param_distance(const Params& a, const Params& b) {
  return std::max({std::abs(a(0) - b(0)), std::abs(wrap_pi(a(1) - b(1))), std::abs(a(2) - b(2))});
}

}  // namespace

RigidityScan rigidity_scan(double alpha, double beta, double gamma, int resolution) {
  if (auto v = triangle_violation(alpha, beta, gamma)) {
    throw DomainError("rigidity scan: cone angles outside the admissible domain: " + *v);
  }
  if (resolution < 2) throw std::invalid_argument("rigidity scan: resolution must be >= 2");

  const ResidualSystem sys{alpha, beta, gamma};
  const int n = resolution;
  const std::size_t nodes = static_cast<std::size_t>(n) + 1;
  std::vector<double> phi(nodes), psi(nodes), theta(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    phi[i] = kPi * static_cast<double>(i) / n;
    psi[i] = kTwoPi * static_cast<double>(i) / n;
    theta[i] = kPi * static_cast<double>(i) / n;
  }

  RigidityScan scan;
  std::vector<Params> found;
  Slab lower, upper;
  fill_slab(lower, sys, phi[0], psi, theta);
  for (int i = 0; i < n; ++i) {
    fill_slab(upper, sys, phi[static_cast<std::size_t>(i) + 1], psi, theta);
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        bool all_change = true;
        for (int k = 0; k < 5 && all_change; ++k) {
          double lo = lower.r[k][j * nodes + l], hi = lo;
          for (const Slab* s : {&lower, &upper}) {
            for (int dj = 0; dj < 2; ++dj) {
              for (int dl = 0; dl < 2; ++dl) {
                const double v = s->r[k][(j + dj) * nodes + (l + dl)];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
              }
            }
          }
          all_change = lo <= 0.0 && hi >= 0.0;
        }
        if (!all_change) continue;

        ++scan.candidate_cells;
        const Params start((i + 0.5) * kPi / n, (j + 0.5) * kTwoPi / n, (l + 0.5) * kPi / n);
        const std::optional<Params> root = refine(sys, start);
        if (!root) {
          ++scan.unconverged;
          continue;
        }
        if (std::sin((*root)(0)) < 1e-6 || std::sin((*root)(2)) < 1e-6) {
          ++scan.degenerate;
          continue;
        }
        const bool seen = std::any_of(found.begin(), found.end(), [&](const Params& f) {
          return param_distance(f, *root) <= 1e-6;
        });
        if (!seen) found.push_back(*root);
      }
    }
    std::swap(lower, upper);
  }

  for (const Params& p : found) {
    ScanSolution s;
    s.phi = p(0);
    s.psi = p(1);
    s.theta = p(2);
    s.residual = sys(p).cwiseAbs().maxCoeff();
    if (std::abs(wrap_pi(s.psi - 0.5 * alpha)) <= 1e-6) {
      s.branch = ScanBranch::Primary;
    } else if (std::abs(wrap_pi(s.psi - 0.5 * alpha - kPi)) <= 1e-6) {
      s.branch = ScanBranch::Shifted;
    } else {
      s.branch = ScanBranch::Other;
    }
    scan.solutions.push_back(s);
  }
  std::sort(scan.solutions.begin(), scan.solutions.end(), [](const ScanSolution& a, const ScanSolution& b) {
    return std::tie(a.psi, a.phi, a.theta) < std::tie(b.psi, b.phi, b.theta);
  });
  return scan;
}

}  // namespace hopfcone
