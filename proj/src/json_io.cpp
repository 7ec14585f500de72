#include "gce/json_io.hpp"

#include <fstream>

namespace gce {

using nlohmann::json;

namespace {

json config_to_json(const SampleConfig& cfg) {
  return {{"seed", cfg.seed},
          {"count", cfg.count},
          {"a_max", cfg.a_max},
          {"tolerance", cfg.tolerance}};
}

double number_at(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw Error(ErrorKind::malformed_input, std::string("missing numeric field '") + key + "'");
  return j.at(key).get<double>();
}

}  // namespace

json covariance_to_json(const CovarianceMatrix& cm) {
  json rows = json::array();
  for (const auto& row : cm.rows()) rows.push_back(row);
  return {{"convention", kConvention}, {"matrix", rows}};
}

CovarianceMatrix covariance_from_json(const json& j) {
  if (!j.is_object() || !j.contains("convention") || !j.at("convention").is_string())
    throw Error(ErrorKind::malformed_input, "covariance JSON needs a 'convention' string");
  if (j.at("convention").get<std::string>() != kConvention)
    throw Error(ErrorKind::malformed_input,
                "unsupported convention '" + j.at("convention").get<std::string>() +
                    "', expected '" + kConvention + "'");
  const json& m = j.value("matrix", json());
  if (!m.is_array() || m.size() != 4)
    throw Error(ErrorKind::malformed_input, "'matrix' must be a 4x4 array");
  CovarianceMatrix cm;
  for (int i = 0; i < 4; ++i) {
    const json& row = m.at(i);
    if (!row.is_array() || row.size() != 4)
      throw Error(ErrorKind::malformed_input, "'matrix' must be a 4x4 array");
    for (int j2 = 0; j2 < 4; ++j2) {
      if (!row.at(j2).is_number())
        throw Error(ErrorKind::malformed_input, "matrix entries must be numbers");
      cm(i, j2) = row.at(j2).get<double>();
    }
  }
  return cm;
}

CovarianceMatrix read_covariance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::malformed_input, path.string() + ": " + e.what());
  }
  return covariance_from_json(j);
}

void write_covariance(const std::filesystem::path& path, const CovarianceMatrix& cm) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out << covariance_to_json(cm).dump(2) << '\n';
  if (!out) throw Error(ErrorKind::io, "write failed: " + path.string());
}

json purity_point_to_json(const PurityPoint& p) {
  json j = {{"mu1", p.mu1}, {"mu2", p.mu2}, {"mu", p.mu}, {"delta", nullptr}};
  if (p.delta) j["delta"] = *p.delta;
  return j;
}

PurityPoint purity_point_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::malformed_input, "purity point must be an object");
  PurityPoint p;
  p.mu1 = number_at(j, "mu1");
  p.mu2 = number_at(j, "mu2");
  p.mu = number_at(j, "mu");
  if (j.contains("delta") && !j.at("delta").is_null()) p.delta = number_at(j, "delta");
  return p;
}

json standard_form_to_json(const StandardForm& sf) {
  return {{"a", sf.a}, {"b", sf.b}, {"c_plus", sf.c_plus}, {"c_minus", sf.c_minus}};
}

json report_to_json(const BoundsReport& r) {
  return {{"kind", "validate_bounds"},
          {"config", config_to_json(r.config)},
          {"samples", r.samples},
          {"acceptance_rate", r.acceptance_rate},
          {"violations",
           {{"total", r.total_violations()},
            {"delta_bounds", r.delta_violations},
            {"en_bounds", r.en_violations},
            {"classification", r.classification_violations},
            {"purity", r.purity_violations}}},
          {"worst_margins",
           {{"delta_min", r.worst_delta_min_margin},
            {"delta_max", r.worst_delta_max_margin},
            {"en_min", r.worst_en_min_margin},
            {"en_max", r.worst_en_max_margin},
            {"purity", r.worst_purity_margin}}}};
}

json report_to_json(const CrosscheckReport& r) {
  return {{"kind", "crosscheck_closed_forms"},
          {"config", config_to_json(r.config)},
          {"triples", r.triples},
          {"failures", r.failures},
          {"max_deviation",
           {{"en_max", r.max_en_max_deviation},
            {"en_min", r.max_en_min_deviation},
            {"squeezing", r.max_squeezing_deviation}}}};
}

}  // namespace gce
