#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cli/serialize.hpp"
#include "hopfcone/errors.hpp"
#include "hopfcone/invariants.hpp"

namespace hopfcone::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double alpha = std::nan("");
  double beta = std::nan("");
  double gamma = std::nan("");
  double tau = std::nan("");
  bool degrees = false;
  int samples = -1;
  int steps = 10000;
  double tol = 1e-10;
  std::string format = "json";
  std::string out;
  unsigned long long seed = 1;
  std::string inject;
  std::vector<std::string> bases;
  std::vector<std::string> polars;
  std::string from;
  bool stereo = false;
};

double to_radians(double v, bool degrees) { return degrees ? v * kPi / 180.0 : v; }

double require(double v, const char* name, bool degrees) {
  if (std::isnan(v)) throw UsageError(std::string("missing --") + name);
  return to_radians(v, degrees);
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + flag + " value '" + text + "'");
    }
  }
  if (values.size() != expected) {
    throw UsageError(std::string(flag) + " expects " + std::to_string(expected) +
                     " comma-separated numbers, got '" + text + "'");
  }
  return values;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool want_csv(const Options& o) { return o.format == "csv"; }

// ---------------------------------------------------------------- commands

std::string cmd_triangle(const Options& o) {
  const double a = require(o.alpha, "alpha", o.degrees);
  const double b = require(o.beta, "beta", o.degrees);
  const double c = require(o.gamma, "gamma", o.degrees);
  const TriangleSolution t = solve_triangle(a, b, c);
  const auto residuals = residuals_h3(a, b, c, t.phi, t.psi, t.theta);
  const Json j = triangle_json(t, residuals);
  return want_csv(o) ? object_to_csv(j) : dump(j);
}

Json with_schlafli(Json j, ManifoldKind kind, std::span<const double> target, int steps) {
  const SchlafliCheck check = schlafli_check(kind, target, steps);
  j["schlafli_steps"] = steps;
  j["schlafli_volume"] = check.volume;
  j["schlafli_refined"] = check.refined;
  j["schlafli_converged"] = check.converged;
  return j;
}

std::string cmd_h3(const Options& o) {
  const double a = require(o.alpha, "alpha", o.degrees);
  const double b = require(o.beta, "beta", o.degrees);
  const double c = require(o.gamma, "gamma", o.degrees);
  Json j = report_json(h3_report(a, b, c));
  if (o.steps > 0) {
    const double target[] = {a, b, c};
    j = with_schlafli(std::move(j), ManifoldKind::H3, target, o.steps);
  }
  return want_csv(o) ? object_to_csv(j) : dump(j);
}

std::string cmd_h4(const Options& o) {
  const double a = require(o.alpha, "alpha", o.degrees);
  if (!quadrangle_exists(a)) throw DomainError("H4 cone angle must satisfy pi < alpha < 2pi");
  const double tau = std::isnan(o.tau) ? symmetric_tau(a) : to_radians(o.tau, o.degrees);
  Json j = report_json(h4_report(a, tau));
  if (o.steps > 0) {
    const double target[] = {a};
    j = with_schlafli(std::move(j), ManifoldKind::H4, target, o.steps);
  }
  return want_csv(o) ? object_to_csv(j) : dump(j);
}

std::string cmd_sweep(const Options& o) {
  const double a = require(o.alpha, "alpha", o.degrees);
  const int n = o.samples < 0 ? 9 : o.samples;
  if (n < 3) throw UsageError("sweep needs --samples >= 3");
  if (!quadrangle_exists(a)) throw DomainError("H4 cone angle must satisfy pi < alpha < 2pi");
  const std::vector<SweepRow> rows = flexibility_sweep(a, n);
  return want_csv(o) ? sweep_csv(rows) : dump(sweep_json(a, rows));
}

// ------------------------------------------------------------------ verify

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Admissible triple kept 0.05 away from every bounding inequality.
std::array<double, 3> sample_triple(Rng& rng) {
  for (;;) {
    const double a = uniform(rng, 0.05, kTwoPi - 0.05);
    const double b = uniform(rng, 0.05, kTwoPi - 0.05);
    const double c = uniform(rng, 0.05, kTwoPi - 0.05);
    const double margin = std::min({a + b + c - kTwoPi, kTwoPi + c - a - b, kTwoPi - c + a - b,
                                    kTwoPi - c - a + b});
    if (margin > 0.05) return {a, b, c};
  }
}

std::pair<double, double> sample_alpha_tau(Rng& rng) {
  const double a = uniform(rng, kPi + 0.05, kTwoPi - 0.05);
  const TauInterval range = tau_interval(a);
  return {a, uniform(rng, range.lower + 0.02, range.upper - 0.02)};
}

struct Measured {
  double max_error = 0.0;
  int cases = 0;
};

struct Suite {
  const char* name;
  bool fixed_threshold;  // uses 1e-8 instead of --tol
  std::function<Measured(Rng&, int, double, const Options&)> run;
};

Measured suite_isometry(Rng& rng, int n, double eps, const Options&) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const IsometryS3 g{sample_su2(rng), sample_su2(rng)};
    const IsometryS3 h{sample_su2(rng), sample_su2(rng)};
    const SU2Element p = sample_su2(rng), q = sample_su2(rng);
    worst = std::max(worst, std::abs(distance(apply(g, p), apply(g, q)) + eps - distance(p, q)));
    worst = std::max(worst, matrix_max_diff(apply(g * h, p), apply(h, apply(g, p))));
  }
  return {worst, n};
}

Measured suite_hopf(Rng& rng, int n, double eps, const Options&) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const BasePoint b = sample_base_point(rng);
    const SU2Element p = fibre_over(b).point(uniform(rng, 0.0, kTwoPi));
    const BasePoint img = hopf_map(p);
    worst = std::max({worst, std::abs(img.a() + eps - b.a()), std::abs(img.b() - b.b()),
                      std::abs(img.c() - b.c())});
  }
  return {worst, n};
}

Measured suite_equidistance(Rng& rng, int n, double eps, const Options&) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const BasePoint p = sample_base_point(rng), q = sample_base_point(rng);
    const Perpendicular perp = common_perpendicular(fibre_over(p), fibre_over(q));
    worst = std::max(worst, std::abs(perp.delta + eps - 0.5 * base_distance(p, q)));
  }
  return {worst, n};
}

Measured suite_relations(Rng& rng, int n, double eps, const Options&) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto [a, b, c] = sample_triple(rng);
    const TriangleSolution t = solve_triangle(a, b, c);
    const HolonomyRep h3 = make_representation(
        ManifoldKind::H3,
        std::vector<AxisData>{{0.0, 0.0, a}, {0.0, t.phi, b}, {t.psi, t.theta, c + eps}});
    const auto [alpha, tau] = sample_alpha_tau(rng);
    const HolonomyRep h4 = build_h4(alpha, tau);
    worst = std::max({worst, relation_residual(h3), centrality_residual(h3), relation_residual(h4),
                      centrality_residual(h4)});
  }
  return {worst, n};
}

Measured suite_lengths(Rng& rng, int n, double eps, const Options&) {
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto [a, b, c] = sample_triple(rng);
    const double l3 = h3_length(a, b, c) + eps;
    for (const double l : singular_lengths(build_h3(a, b, c))) {
      worst = std::max({worst, std::abs(l - l3), std::abs(0.5 * l * l - h3_volume(a, b, c))});
    }
    const auto [alpha, tau] = sample_alpha_tau(rng);
    for (const double l : singular_lengths(build_h4(alpha, tau))) {
      worst = std::max({worst, std::abs(l - h4_length(alpha)),
                        std::abs(0.5 * l * l - h4_volume(alpha))});
    }
  }
  return {worst, n};
}

Measured suite_schlafli(Rng& rng, int n, double eps, const Options& o) {
  double worst = 0.0;
  for (int i = 0; i < std::min(n, 3); ++i) {
    const auto target = sample_triple(rng);
    const double v = schlafli_volume(ManifoldKind::H3, target, o.steps) + eps;
    worst = std::max(worst, std::abs(v - h3_volume(target[0], target[1], target[2])));
  }
  const double alpha[] = {sample_alpha_tau(rng).first};
  worst = std::max(worst, std::abs(schlafli_volume(ManifoldKind::H4, alpha, o.steps) -
                                   h4_volume(alpha[0])));
  return {worst, std::min(n, 3) + 1};
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"isometry_invariance", false, suite_isometry},
      {"hopf_roundtrip", false, suite_hopf},
      {"equidistance", true, suite_equidistance},
      {"relation_residuals", false, suite_relations},
      {"length_volume_consistency", false, suite_lengths},
      {"schlafli_agreement", true, suite_schlafli},
  };
  return all;
}

std::string cmd_verify(const Options& o, bool& failed) {
  const int n = o.samples < 0 ? 20 : o.samples;
  if (n < 1) throw UsageError("verify needs --samples >= 1");
  if (o.steps < 2 || o.steps % 2 != 0) throw UsageError("verify needs an even --steps >= 2");
  const auto& names = verify_suite_names();
  if (!o.inject.empty() && std::find(names.begin(), names.end(), o.inject) == names.end()) {
    throw UsageError("unknown suite for --inject: " + o.inject);
  }

  std::vector<SuiteResult> results;
  for (std::size_t i = 0; i < suites().size(); ++i) {
    const Suite& s = suites()[i];
    Rng rng(o.seed + 7919ULL * i);  // independent stream per suite
    const double eps = o.inject == s.name ? 1e-6 : 0.0;
    SuiteResult r;
    r.name = s.name;
    r.threshold = s.fixed_threshold ? 1e-8 : o.tol;
    const Measured m = s.run(rng, n, eps, o);
    r.max_error = m.max_error;
    r.cases = m.cases;
    r.pass = r.max_error < r.threshold;
    results.push_back(r);
  }
  failed = std::any_of(results.begin(), results.end(), [](const SuiteResult& r) { return !r.pass; });
  return want_csv(o) ? verify_csv(results) : dump(verify_json(o.seed, n, results));
}

// ------------------------------------------------------------------ fibres

std::string cmd_fibres(const Options& o) {
  const int n = o.samples < 0 ? 64 : o.samples;
  if (n < 1) throw UsageError("fibres needs --samples >= 1");

  std::vector<BasePoint> bases;
  for (const std::string& text : o.bases) {
    const auto v = parse_list(text, 3, "--base");
    bases.push_back(BasePoint::cartesian(v[0], v[1], v[2]));
  }
  for (const std::string& text : o.polars) {
    const auto v = parse_list(text, 2, "--polar");
    bases.push_back(BasePoint::polar(to_radians(v[0], o.degrees), to_radians(v[1], o.degrees)));
  }
  if (o.from == "h3") {
    const HolonomyRep rep = build_h3(require(o.alpha, "alpha", o.degrees),
                                     require(o.beta, "beta", o.degrees),
                                     require(o.gamma, "gamma", o.degrees));
    for (const BasePoint& b : axis_base_points(rep)) bases.push_back(b);
  } else if (o.from == "h4") {
    const double a = require(o.alpha, "alpha", o.degrees);
    if (!quadrangle_exists(a)) throw DomainError("H4 cone angle must satisfy pi < alpha < 2pi");
    const double tau = std::isnan(o.tau) ? symmetric_tau(a) : to_radians(o.tau, o.degrees);
    for (const BasePoint& b : axis_base_points(build_h4(a, tau))) bases.push_back(b);
  } else if (!o.from.empty()) {
    throw UsageError("--from expects h3 or h4");
  }
  if (bases.empty()) throw UsageError("fibres needs --base, --polar or --from");

  std::vector<FibreSamples> fibres;
  for (const BasePoint& b : bases) {
    const GreatCircle circle = fibre_over(b);
    FibreSamples f{b, {}};
    for (int k = 0; k < n; ++k) f.points.push_back(circle.point(kTwoPi * k / n));
    fibres.push_back(std::move(f));
  }
  return want_csv(o) ? fibres_csv(fibres, o.stereo) : dump(fibres_json(fibres, o.stereo));
}

// ----------------------------------------------------------------- parsing

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--degrees", o.degrees, "Angles are given in degrees");
  sub->add_option("--tol", o.tol, "Pass tolerance")->capture_default_str();
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "Write the output to this path");
}

void add_angles(CLI::App* sub, Options& o, bool with_beta_gamma) {
  sub->add_option("--alpha", o.alpha, "Cone angle alpha");
  if (with_beta_gamma) {
    sub->add_option("--beta", o.beta, "Cone angle beta");
    sub->add_option("--gamma", o.gamma, "Cone angle gamma");
  }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

CliResult run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Spherical cone-manifold structures on Hopf-link complements", "hopfcone"};
  app.require_subcommand(1);

  auto* triangle = app.add_subcommand("triangle", "Solve the base triangle of H3");
  add_angles(triangle, o, true);
  add_common(triangle, o);

  auto* h3 = app.add_subcommand("h3", "Holonomy and invariants of H3(alpha, beta, gamma)");
  add_angles(h3, o, true);
  h3->add_option("--steps", o.steps, "Simpson steps for the Schlafli check (0 skips it)");
  add_common(h3, o);

  auto* h4 = app.add_subcommand("h4", "Holonomy and invariants of H4(alpha; tau)");
  add_angles(h4, o, false);
  h4->add_option("--tau", o.tau, "Deformation parameter (default: symmetric)");
  h4->add_option("--steps", o.steps, "Simpson steps for the Schlafli check (0 skips it)");
  add_common(h4, o);

  auto* sweep = app.add_subcommand("sweep", "Flexibility sweep of H4 over tau");
  add_angles(sweep, o, false);
  sweep->add_option("--samples", o.samples, "Number of tau values (default 9)");
  add_common(sweep, o);

  auto* verify = app.add_subcommand("verify", "Randomized invariant suites");
  verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  verify->add_option("--samples", o.samples, "Cases per suite (default 20)");
  verify->add_option("--steps", o.steps, "Simpson steps for the Schlafli suite")
      ->capture_default_str();
  verify->add_option("--inject", o.inject, "Perturb one suite so that it must fail");
  add_common(verify, o);

  auto* fibres = app.add_subcommand("fibres", "Sample points on Hopf fibres");
  fibres->add_option("--base", o.bases, "Base point a,b,c (repeatable)");
  fibres->add_option("--polar", o.polars, "Base point psi,theta (repeatable)");
  fibres->add_option("--from", o.from, "Use the axis fibres of h3 or h4");
  add_angles(fibres, o, true);
  fibres->add_option("--tau", o.tau, "Deformation parameter for --from h4");
  fibres->add_option("--samples", o.samples, "Points per fibre (default 64)");
  fibres->add_flag("--stereo", o.stereo, "Add stereographic coordinates");
  add_common(fibres, o);

  CliResult result;
  std::vector<std::string> argv_store{"hopfcone"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }

  std::string payload;
  bool failed = false;
  try {
    if (*triangle) payload = cmd_triangle(o);
    else if (*h3) payload = cmd_h3(o);
    else if (*h4) payload = cmd_h4(o);
    else if (*sweep) payload = cmd_sweep(o);
    else if (*verify) payload = cmd_verify(o, failed);
    else payload = cmd_fibres(o);
  } catch (const UsageError& e) {
    result.exit_code = kUsage;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  } catch (const std::invalid_argument& e) {
    result.exit_code = kUsage;
    result.err = std::string("usage error: ") + e.what() + "\n";
    return result;
  } catch (const DomainError& e) {
    result.exit_code = kDomain;
    result.err = std::string("domain error: ") + e.what() + "\n";
    return result;
  } catch (const BranchError& e) {
    result.exit_code = kDomain;
    result.err = std::string("branch error: ") + e.what() + "\n";
    return result;
  }

  if (o.out.empty()) {
    result.out = std::move(payload);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << payload;
    if (!file) {
      result.exit_code = kUsage;
      result.err = "cannot write " + o.out + "\n";
      return result;
    }
  }
  if (failed) {
    result.exit_code = kVerificationFailed;
    result.err = "verification failed\n";
  }
  return result;
}

}  // namespace hopfcone::cli
