#pragma once

// JSON and CSV encodings of the command outputs. JSON objects keep keys in
// insertion order; CSV uses a header row, LF line endings and %.17g floats.

#include <array>
#include <string>
#include <vector>

#include "hopfcone/invariants.hpp"
#include "json.hpp"

namespace hopfcone::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hopf-cone/1";

std::string format_double(double v);

/// Rows of cells joined with commas, one LF-terminated line per row.
std::string to_csv(const std::vector<std::vector<std::string>>& rows);

/// Two-column key,value table of the scalar and array members of a flat
/// JSON object; arrays are flattened as key[i].
std::string object_to_csv(const Json& object);

Json triangle_json(const TriangleSolution& t, const std::array<double, 5>& residuals);
Json report_json(const GeometryReport& report);

Json sweep_json(double alpha, const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

struct SuiteResult {
  std::string name;
  int cases = 0;
  double max_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

Json verify_json(unsigned long long seed, int samples, const std::vector<SuiteResult>& suites);
std::string verify_csv(const std::vector<SuiteResult>& suites);

struct FibreSamples {
  BasePoint base;
  std::vector<SU2Element> points;
};

Json fibres_json(const std::vector<FibreSamples>& fibres, bool stereo);
std::string fibres_csv(const std::vector<FibreSamples>& fibres, bool stereo);

/// Stereographic projection of S^3 from (0, 1, 0, 0) onto the (w, y, z) space.
std::array<double, 3> stereographic(const SU2Element& p);

}  // namespace hopfcone::cli
