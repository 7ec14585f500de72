#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "gce/core.hpp"
#include "gce/entangle.hpp"
#include "gce/estimator.hpp"
#include "gce/extremal.hpp"
#include "gce/json_io.hpp"
#include "gce/oracle.hpp"
#include "gce/param.hpp"

namespace gce::cli {

namespace {

struct Purities {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu = 0.0;
};

struct Output {
  std::string log_base = "e";
  bool json = false;

  // E_N values are natural-log internally.
  double en(double value) const { return log_base == "2" ? value / std::log(2.0) : value; }
};

void add_purities(CLI::App* cmd, Purities& p, bool with_global = true) {
  cmd->add_option("--mu1", p.mu1, "marginal purity of mode 1")->required();
  cmd->add_option("--mu2", p.mu2, "marginal purity of mode 2")->required();
  if (with_global) cmd->add_option("--mu", p.mu, "global purity")->required();
}

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("--log-base", o.log_base, "logarithm base for E_N output")
      ->check(CLI::IsMember({"e", "2"}));
  cmd->add_flag("--json", o.json, "emit JSON instead of key=value lines");
}

class KeyValues {
 public:
  KeyValues& add(const std::string& key, double value) {
    lines_.emplace_back(key, format_number(value));
    json_[key] = value;
    return *this;
  }
  KeyValues& add(const std::string& key, const std::string& value) {
    lines_.emplace_back(key, value);
    json_[key] = value;
    return *this;
  }
  KeyValues& add(const std::string& key, bool value) {
    lines_.emplace_back(key, value ? "true" : "false");
    json_[key] = value;
    return *this;
  }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << json_.dump(2) << '\n';
      return;
    }
    for (const auto& [k, v] : lines_) out << k << '=' << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

void add_estimate(KeyValues& kv, const EstimateResult& est, const Output& o) {
  kv.add("region", std::string(to_string(est.region)))
      .add("en_min", o.en(est.en_min))
      .add("en_max", o.en(est.en_max))
      .add("en_avg", o.en(est.en_avg))
      .add("rel_err", est.rel_err)
      .add("log_base", o.log_base);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::out_of_region:
    case ErrorKind::inactive_branch: return kOutOfRegion;
    case ErrorKind::malformed_input: return kMalformedInput;
    case ErrorKind::unphysical: return kUnphysical;
    case ErrorKind::io: return kIoError;
    case ErrorKind::configuration: return kUsage;
  }
  return kUsage;
}

std::vector<double> grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo))
    throw Error(ErrorKind::configuration, "sweep ranges need step > 0 and max >= min");
  std::vector<double> values;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long k = 0; k <= n; ++k) values.push_back(lo + static_cast<double>(k) * step);
  return values;
}

void emit_covariance(const CovarianceMatrix& cm, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << covariance_to_json(cm).dump(2) << '\n';
  } else {
    write_covariance(path, cm);
  }
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double tolerance_from_env() {
  const char* raw = std::getenv("GCE_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return kDefaultTolerance;
  char* end = nullptr;
  const double tol = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(tol >= 0.0) || !std::isfinite(tol))
    throw Error(ErrorKind::configuration, std::string("invalid GCE_TOLERANCE '") + raw + "'");
  return tol;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of two-mode Gaussian states from global and marginal purities",
               "gce"};
  app.require_subcommand(1);

  std::function<int()> action;

  // classify
  Purities classify_p;
  Output classify_o;
  auto* classify_cmd = app.add_subcommand("classify", "region and E_N bounds from purities");
  add_purities(classify_cmd, classify_p);
  add_output(classify_cmd, classify_o);
  classify_cmd->callback([&] {
    action = [&] {
      const double tol = tolerance_from_env();
      KeyValues kv;
      add_estimate(kv, estimate(classify_p.mu1, classify_p.mu2, classify_p.mu, tol), classify_o);
      kv.print(out, classify_o.json);
      return kOk;
    };
  });

  // bounds
  Purities bounds_p;
  Output bounds_o;
  std::optional<double> bounds_delta;
  auto* bounds_cmd = app.add_subcommand("bounds", "Delta bounds and E_N bounds at fixed purities");
  add_purities(bounds_cmd, bounds_p);
  add_output(bounds_cmd, bounds_o);
  bounds_cmd->add_option("--delta", bounds_delta, "seralian Delta; adds the exact E_N");
  bounds_cmd->callback([&] {
    action = [&] {
      const double tol = tolerance_from_env();
      const DeltaBounds db = delta_bounds(bounds_p.mu1, bounds_p.mu2, bounds_p.mu, tol);
      KeyValues kv;
      kv.add("delta_min", db.min).add("delta_max", db.max);
      const EntanglementReport rep =
          entanglement_report({bounds_p.mu1, bounds_p.mu2, bounds_p.mu, bounds_delta}, tol);
      kv.add("region", std::string(to_string(rep.region)))
          .add("en_min", bounds_o.en(rep.en_min))
          .add("en_max", bounds_o.en(rep.en_max));
      if (rep.log_negativity) {
        kv.add("n_tilde_minus", *rep.n_tilde_minus)
            .add("log_negativity", bounds_o.en(*rep.log_negativity));
      }
      kv.add("log_base", bounds_o.log_base);
      kv.print(out, bounds_o.json);
      return kOk;
    };
  });

  // construct {gmems|glems|gmemms|sqth}
  auto* construct_cmd = app.add_subcommand("construct", "emit an extremal state as covariance JSON");
  construct_cmd->require_subcommand(1);
  std::string construct_path;
  Purities construct_p;
  for (const char* kind : {"gmems", "glems"}) {
    auto* sub = construct_cmd->add_subcommand(
        kind, std::string(kind) == "gmems" ? "maximally entangled state at fixed purities"
                                            : "least entangled state at fixed purities");
    add_purities(sub, construct_p);
    sub->add_option("-o,--output", construct_path, "output file (default stdout)");
    const bool most = std::string(kind) == "gmems";
    sub->callback([&, most] {
      action = [&, most] {
        const double tol = tolerance_from_env();
        const StandardForm sf = most
                                    ? gmems(construct_p.mu1, construct_p.mu2, construct_p.mu, tol)
                                    : least_entangled(construct_p.mu1, construct_p.mu2,
                                                      construct_p.mu, tol);
        emit_covariance(from_standard_form(sf, tol), construct_path, out);
        return kOk;
      };
    });
  }
  auto* gmemms_cmd =
      construct_cmd->add_subcommand("gmemms", "maximally entangled state at fixed marginals");
  add_purities(gmemms_cmd, construct_p, false);
  gmemms_cmd->add_option("-o,--output", construct_path, "output file (default stdout)");
  gmemms_cmd->callback([&] {
    action = [&] {
      const double tol = tolerance_from_env();
      emit_covariance(from_standard_form(gmemms(construct_p.mu1, construct_p.mu2, tol), tol),
                      construct_path, out);
      return kOk;
    };
  });
  SqueezedThermalParams sqth;
  auto* sqth_cmd = construct_cmd->add_subcommand("sqth", "two-mode squeezed thermal state");
  sqth_cmd->add_option("--r", sqth.r, "two-mode squeezing")->required();
  sqth_cmd->add_option("--n-minus", sqth.n_minus, "thermal symplectic eigenvalue of mode 1");
  sqth_cmd->add_option("--n-plus", sqth.n_plus, "thermal symplectic eigenvalue of mode 2");
  sqth_cmd->add_option("-o,--output", construct_path, "output file (default stdout)");
  sqth_cmd->callback([&] {
    action = [&] {
      const double tol = tolerance_from_env();
      emit_covariance(from_standard_form(squeezed_thermal(sqth), tol), construct_path, out);
      return kOk;
    };
  });

  // analyze
  std::string analyze_path;
  Output analyze_o;
  auto* analyze_cmd = app.add_subcommand("analyze", "exact and purity-only entanglement of a state");
  analyze_cmd->add_option("path", analyze_path, "covariance matrix JSON file")->required();
  add_output(analyze_cmd, analyze_o);
  analyze_cmd->callback([&] {
    action = [&] {
      const double tol = tolerance_from_env();
      const CovarianceMatrix cm = read_covariance(analyze_path);
      const PurityPoint p = purities(cm, tol);
      const StandardForm sf = to_standard_form(cm, tol);
      const double n_tilde = ppt_smallest_eigenvalue(cm, tol);
      const double exact = log_negativity(n_tilde);
      const EstimateResult est = estimate(p.mu1, p.mu2, p.mu, tol);
      KeyValues kv;
      kv.add("mu1", p.mu1)
          .add("mu2", p.mu2)
          .add("mu", p.mu)
          .add("delta", *p.delta)
          .add("a", sf.a)
          .add("b", sf.b)
          .add("c_plus", sf.c_plus)
          .add("c_minus", sf.c_minus)
          .add("n_tilde_minus", n_tilde)
          .add("separable", n_tilde >= 0.5 - tol)
          .add("log_negativity", analyze_o.en(exact));
      add_estimate(kv, est, analyze_o);
      kv.add("contained", est.en_min - tol <= exact && exact <= est.en_max + tol);
      kv.print(out, analyze_o.json);
      return kOk;
    };
  });

  // sweep
  double mu_i_min = 0.05, mu_i_max = 1.0, mu_i_step = 0.05;
  double mu_min = 0.05, mu_max = 1.0, mu_step = 0.05;
  std::string sweep_path;
  std::string sweep_base = "e";
  auto* sweep_cmd = app.add_subcommand("sweep", "symmetric purity grid as CSV");
  sweep_cmd->add_option("--mu-i-min", mu_i_min, "smallest marginal purity");
  sweep_cmd->add_option("--mu-i-max", mu_i_max, "largest marginal purity");
  sweep_cmd->add_option("--mu-i-step", mu_i_step, "marginal purity step");
  sweep_cmd->add_option("--mu-min", mu_min, "smallest global purity");
  sweep_cmd->add_option("--mu-max", mu_max, "largest global purity");
  sweep_cmd->add_option("--mu-step", mu_step, "global purity step");
  sweep_cmd->add_option("-o,--output", sweep_path, "CSV file (default stdout)");
  sweep_cmd->add_option("--log-base", sweep_base, "logarithm base for E_N columns")
      ->check(CLI::IsMember({"e", "2"}));
  sweep_cmd->callback([&] {
    action = [&] {
      const double tol = tolerance_from_env();
      const Output o{sweep_base, false};
      const std::vector<double> mu_is = grid(mu_i_min, mu_i_max, mu_i_step);
      const std::vector<double> mus = grid(mu_min, mu_max, mu_step);
      std::ostringstream csv;
      csv << "mu_i,mu,region,en_min,en_max,en_avg,rel_err\n";
      for (double mu_i : mu_is) {
        for (double mu : mus) {
          csv << format_number(mu_i) << ',' << format_number(mu) << ',';
          if (!check_purity_constraints(mu_i, mu_i, mu, tol)) {
            csv << "unphysical,,,,\n";
            continue;
          }
          const EstimateResult est = estimate(mu_i, mu_i, mu, tol);
          csv << to_string(est.region) << ',' << format_number(o.en(est.en_min)) << ','
              << format_number(o.en(est.en_max)) << ',' << format_number(o.en(est.en_avg)) << ','
              << format_number(est.rel_err) << '\n';
        }
      }
      if (sweep_path.empty() || sweep_path == "-") {
        out << csv.str();
      } else {
        std::ofstream file(sweep_path, std::ios::binary);
        if (!file) throw Error(ErrorKind::io, "cannot write " + sweep_path);
        file << csv.str();
        if (!file) throw Error(ErrorKind::io, "write failed: " + sweep_path);
      }
      return kOk;
    };
  });

  // validate
  SampleConfig cfg;
  std::size_t crosscheck_count = 10000;
  auto* validate_cmd = app.add_subcommand("validate", "Monte Carlo check of every analytic bound");
  validate_cmd->add_option("--seed", cfg.seed, "random seed");
  validate_cmd->add_option("--count", cfg.count, "random physical states to sample");
  validate_cmd->add_option("--crosscheck-count", crosscheck_count,
                           "random purity triples for the closed-form cross-check");
  validate_cmd->add_option("--a-max", cfg.a_max, "largest sampled diagonal entry");
  validate_cmd->callback([&] {
    action = [&] {
      cfg.tolerance = tolerance_from_env();
      const BoundsReport bounds = validate_bounds(cfg);
      SampleConfig cross_cfg = cfg;
      cross_cfg.count = crosscheck_count;
      const CrosscheckReport cross = crosscheck_closed_forms(cross_cfg);
      const nlohmann::json report = {{"bounds", report_to_json(bounds)},
                                     {"crosscheck", report_to_json(cross)}};
      out << report.dump(2) << '\n';
      return bounds.total_violations() == 0 && cross.failures == 0 ? kOk : kValidationFailed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const Error& e) {
    err << "gce: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace gce::cli
