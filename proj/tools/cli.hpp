#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gce::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kOutOfRegion = 2,
  kMalformedInput = 3,
  kUnphysical = 4,
  kIoError = 5,
  kValidationFailed = 6,
};

/// Dispatches one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default 1e-9, overridden by the GCE_TOLERANCE environment variable.
double tolerance_from_env();

/// %.12g rendering used for every number the CLI prints.
std::string format_number(double value);

}  // namespace gce::cli
