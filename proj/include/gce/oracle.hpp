#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gce/core.hpp"

namespace gce {

struct SampleConfig {
  std::uint64_t seed = 20040225;
  std::size_t count = 100000;
  double a_max = 5.0;  // diagonal standard-form entries drawn from [1/2, a_max]
  double tolerance = kDefaultTolerance;

  void validate() const;
};

/// Rejection sampler over physical standard forms. Candidates draw a, b
/// uniformly from [1/2, a_max] and c+, c- uniformly from [-sqrt(ab), sqrt(ab)];
/// accepted states are returned in canonical orientation.
class StandardFormSampler {
 public:
  static constexpr std::size_t kMaxTrialsWithoutAcceptance = 1000000;

  explicit StandardFormSampler(const SampleConfig& cfg);

  StandardForm next();

  std::size_t accepted() const { return accepted_; }
  std::size_t trials() const { return trials_; }
  double acceptance_rate() const;

 private:
  SampleConfig cfg_;
  std::mt19937_64 rng_;
  std::size_t accepted_ = 0;
  std::size_t trials_ = 0;
};

struct SampleBatch {
  std::vector<StandardForm> states;
  std::size_t trials = 0;
  double acceptance_rate = 0.0;
};

SampleBatch random_standard_form(const SampleConfig& cfg);

/// Uniform purity triples inside the physical region: mu1, mu2 in
/// [1/(2 a_max), 1], mu in [mu1 mu2, max_global_purity(mu1, mu2)].
std::vector<PurityPoint> random_purity_triples(const SampleConfig& cfg);

struct BoundsReport {
  SampleConfig config;
  std::size_t samples = 0;
  double acceptance_rate = 0.0;

  std::size_t delta_violations = 0;
  std::size_t en_violations = 0;
  std::size_t classification_violations = 0;
  std::size_t purity_violations = 0;  // mu >= mu1 mu2 and the GMEMMS ceiling

  // Smallest slack seen for each inequality; negative means violated.
  double worst_delta_min_margin = 0.0;
  double worst_delta_max_margin = 0.0;
  double worst_en_min_margin = 0.0;
  double worst_en_max_margin = 0.0;
  double worst_purity_margin = 0.0;

  std::size_t total_violations() const {
    return delta_violations + en_violations + classification_violations + purity_violations;
  }
};

/// Checks every analytic bound on explicit samples (purities plus Delta).
/// Exact E_N is taken from the symplectic spectrum of the implied invariants.
BoundsReport validate_bounds(std::span<const PurityPoint> samples, double tol);

/// Samples cfg.count random physical states and checks them.
BoundsReport validate_bounds(const SampleConfig& cfg);

struct CrosscheckReport {
  SampleConfig config;
  std::size_t triples = 0;
  double max_en_max_deviation = 0.0;     // closed form vs spectrum of gmems
  double max_en_min_deviation = 0.0;     // closed form vs spectrum of least entangled state
  // squeezed_thermal(gmems_squeezing) vs gmems, relative to max(1, a, b)
  double max_squeezing_deviation = 0.0;
  std::size_t failures = 0;
};

/// Logarithmic negativity of a standard form via its partially transposed
/// symplectic spectrum.
double spectral_log_negativity(const StandardForm& sf, double tol = kDefaultTolerance);

CrosscheckReport crosscheck_closed_forms(std::span<const PurityPoint> triples, double tol);
CrosscheckReport crosscheck_closed_forms(const SampleConfig& cfg);

}  // namespace gce
