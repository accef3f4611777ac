#include "cli/serialize.hpp"

#include <cstdio>
#include <variant>

namespace hopfcone::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void flatten(const Json& v, const std::string& key, std::vector<std::vector<std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) flatten(child, key.empty() ? k : key + "." + k, rows);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(v[i], key + "[" + std::to_string(i) + "]", rows);
    }
  } else {
    rows.push_back({key, scalar_text(v)});
  }
}

Json triangle_fields(const TriangleSolution& t) {
  return Json{{"alpha", t.alpha}, {"beta", t.beta}, {"gamma", t.gamma},
              {"phi", t.phi},     {"theta", t.theta}, {"psi", t.psi}};
}

Json quadrangle_fields(const QuadrangleSolution& q) {
  return Json{{"alpha", q.alpha}, {"tau", q.tau}, {"ell2", q.ell2}, {"phi", q.phi},
              {"psi", q.psi},     {"b1", q.b1},   {"b2", q.b2}};
}

Json point_json(const SU2Element& p) { return Json::array({p.w(), p.x(), p.y(), p.z()}); }

}  // namespace

std::string object_to_csv(const Json& object) {
  std::vector<std::vector<std::string>> rows{{"key", "value"}};
  flatten(object, "", rows);
  return to_csv(rows);
}

Json triangle_json(const TriangleSolution& t, const std::array<double, 5>& residuals) {
  Json j{{"schema", kSchema}, {"command", "triangle"}};
  j["triangle"] = triangle_fields(t);
  j["residuals"] = residuals;
  double worst = 0.0;
  for (const double r : residuals) worst = std::max(worst, std::abs(r));
  j["max_residual"] = worst;
  return j;
}

Json report_json(const GeometryReport& r) {
  Json j{{"schema", kSchema}, {"command", r.kind == ManifoldKind::H3 ? "h3" : "h4"},
         {"kind", to_string(r.kind)}};
  j["cone_angles"] = r.cone_angles;
  if (r.tau) j["tau"] = *r.tau;
  j["lengths"] = r.lengths;
  j["length_closed_form"] = r.length_closed_form;
  j["volume"] = r.volume;
  j["holonomy_residual"] = r.holonomy_residual;
  j["centrality_residual"] = r.centrality_residual;
  j["trace_central_left"] = r.trace_central_left;
  j["trace_central_right"] = r.trace_central_right;
  j["central_trace_translation"] = r.central_folded.delta;
  j["central_trace_jump"] = r.central_folded.nu;
  Json perps = Json::array();
  for (const AxisPerpendicular& p : r.perpendiculars) {
    perps.push_back(Json{{"first", p.first}, {"second", p.second}, {"length", p.length}});
  }
  j["perpendiculars"] = perps;
  if (const auto* t = std::get_if<TriangleSolution>(&r.base)) {
    j["triangle"] = triangle_fields(*t);
  } else {
    j["quadrangle"] = quadrangle_fields(std::get<QuadrangleSolution>(r.base));
  }
  return j;
}

Json sweep_json(double alpha, const std::vector<SweepRow>& rows) {
  Json j{{"schema", kSchema}, {"command", "sweep"}, {"alpha", alpha}};
  Json table = Json::array();
  for (const SweepRow& r : rows) {
    table.push_back(Json{{"tau", r.tau},
                         {"ell2", r.ell2},
                         {"residual", r.residual},
                         {"b1", r.b1},
                         {"b2", r.b2},
                         {"phi", r.phi},
                         {"delta_h", r.delta_h},
                         {"symmetric", r.symmetric},
                         {"near_degenerate", r.near_degenerate}});
  }
  j["rows"] = table;
  return j;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::vector<std::vector<std::string>> cells{
      {"tau", "ell2", "residual", "b1", "b2", "phi", "delta_h", "symmetric", "near_degenerate"}};
  for (const SweepRow& r : rows) {
    cells.push_back({format_double(r.tau), format_double(r.ell2), format_double(r.residual),
                     format_double(r.b1), format_double(r.b2), format_double(r.phi),
                     format_double(r.delta_h), r.symmetric ? "1" : "0",
                     r.near_degenerate ? "1" : "0"});
  }
  return to_csv(cells);
}

Json verify_json(unsigned long long seed, int samples, const std::vector<SuiteResult>& suites) {
  Json j{{"schema", kSchema}, {"command", "verify"}, {"seed", seed}, {"samples", samples}};
  Json list = Json::array();
  bool all = true;
  for (const SuiteResult& s : suites) {
    list.push_back(Json{{"name", s.name},
                        {"cases", s.cases},
                        {"max_error", s.max_error},
                        {"threshold", s.threshold},
                        {"pass", s.pass}});
    all = all && s.pass;
  }
  j["suites"] = list;
  j["pass"] = all;
  return j;
}

std::string verify_csv(const std::vector<SuiteResult>& suites) {
  std::vector<std::vector<std::string>> cells{{"suite", "cases", "max_error", "threshold", "pass"}};
  for (const SuiteResult& s : suites) {
    cells.push_back({s.name, std::to_string(s.cases), format_double(s.max_error),
                     format_double(s.threshold), s.pass ? "1" : "0"});
  }
  return to_csv(cells);
}

std::array<double, 3> stereographic(const SU2Element& p) {
  const double scale = 1.0 / (1.0 - p.x());
  return {p.w() * scale, p.y() * scale, p.z() * scale};
}

Json fibres_json(const std::vector<FibreSamples>& fibres, bool stereo) {
  Json j{{"schema", kSchema}, {"command", "fibres"}};
  Json list = Json::array();
  for (const FibreSamples& f : fibres) {
    Json entry{{"base", Json::array({f.base.a(), f.base.b(), f.base.c()})}};
    Json pts = Json::array();
    Json proj = Json::array();
    for (const SU2Element& p : f.points) {
      pts.push_back(point_json(p));
      if (stereo) proj.push_back(stereographic(p));
    }
    entry["points"] = pts;
    if (stereo) entry["stereographic"] = proj;
    list.push_back(entry);
  }
  j["fibres"] = list;
  return j;
}

std::string fibres_csv(const std::vector<FibreSamples>& fibres, bool stereo) {
  std::vector<std::string> header{"fibre", "sample", "a", "b", "c", "w", "x", "y", "z"};
  if (stereo) header.insert(header.end(), {"sx", "sy", "sz"});
  std::vector<std::vector<std::string>> cells{header};
  for (std::size_t i = 0; i < fibres.size(); ++i) {
    const FibreSamples& f = fibres[i];
    for (std::size_t k = 0; k < f.points.size(); ++k) {
      const SU2Element& p = f.points[k];
      std::vector<std::string> row{std::to_string(i), std::to_string(k), format_double(f.base.a()),
                                   format_double(f.base.b()), format_double(f.base.c()),
                                   format_double(p.w()), format_double(p.x()),
                                   format_double(p.y()), format_double(p.z())};
      if (stereo) {
        for (const double s : stereographic(p)) row.push_back(format_double(s));
      }
      cells.push_back(std::move(row));
    }
  }
  return to_csv(cells);
}

}  // namespace hopfcone::cli
