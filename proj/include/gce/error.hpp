#pragma once

#include <stdexcept>
#include <string>

namespace gce {

enum class ErrorKind {
  malformed_input,
  unphysical,
  out_of_region,
  inactive_branch,
  configuration,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Default slack applied to every closed inequality (physicality, purity
// region, Delta bounds, classifier thresholds).
inline constexpr double kDefaultTolerance = 1e-9;

// Radicands in [-kRadicandRelTol * scale, 0) are treated as exact zeros.
inline constexpr double kRadicandRelTol = 1e-12;

}  // namespace gce
