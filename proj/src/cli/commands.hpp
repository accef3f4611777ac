#pragma once

// The command-line front end as a pure function of its arguments, so that
// tests can drive it without spawning processes.

#include <string>
#include <vector>

namespace hopfcone::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kVerificationFailed = 3,
};

struct CliResult {
  int exit_code = kOk;
  std::string out;  ///< empty when --out wrote the payload to a file
  std::string err;
};

/// `args` excludes the program name.
CliResult run(const std::vector<std::string>& args);

/// Names accepted by `verify --inject`.
const std::vector<std::string>& verify_suite_names();

}  // namespace hopfcone::cli
