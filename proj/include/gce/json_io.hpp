#pragma once

#include <filesystem>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "gce/core.hpp"
#include "gce/entangle.hpp"
#include "gce/oracle.hpp"

namespace gce {

inline constexpr const char* kConvention = "vacuum=1/2";

/// {"convention": "vacuum=1/2", "matrix": [[...] x4]}
nlohmann::json covariance_to_json(const CovarianceMatrix& cm);

/// Throws malformed_input on a wrong convention, shape, or entry type.
CovarianceMatrix covariance_from_json(const nlohmann::json& j);

CovarianceMatrix read_covariance(const std::filesystem::path& path);
void write_covariance(const std::filesystem::path& path, const CovarianceMatrix& cm);

/// {"mu1": ..., "mu2": ..., "mu": ..., "delta": ...}; delta is null when unknown.
nlohmann::json purity_point_to_json(const PurityPoint& p);
PurityPoint purity_point_from_json(const nlohmann::json& j);

nlohmann::json standard_form_to_json(const StandardForm& sf);
nlohmann::json report_to_json(const BoundsReport& report);
nlohmann::json report_to_json(const CrosscheckReport& report);

}  // namespace gce
