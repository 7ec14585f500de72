#include "gce/error.hpp"

namespace gce {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_input: return "malformed input";
    case ErrorKind::unphysical: return "unphysical parameters";
    case ErrorKind::out_of_region: return "out of region";
    case ErrorKind::inactive_branch: return "inactive branch";
    case ErrorKind::configuration: return "configuration error";
    case ErrorKind::io: return "I/O error";
  }
  return "unknown error";
}

}  // namespace gce
