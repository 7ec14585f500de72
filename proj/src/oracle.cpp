#include "gce/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gce/entangle.hpp"
#include "gce/estimator.hpp"
#include "gce/extremal.hpp"
#include "gce/param.hpp"

namespace gce {

void SampleConfig::validate() const {
  if (count == 0) throw Error(ErrorKind::configuration, "sample count must be positive");
  if (!(a_max > 0.5)) throw Error(ErrorKind::configuration, "a_max must exceed 1/2");
  if (!(tolerance >= 0.0)) throw Error(ErrorKind::configuration, "tolerance must be >= 0");
}

StandardFormSampler::StandardFormSampler(const SampleConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
  cfg_.validate();
}

StandardForm StandardFormSampler::next() {
  std::uniform_real_distribution<double> diag(0.5, cfg_.a_max);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (std::size_t attempt = 0; attempt < kMaxTrialsWithoutAcceptance; ++attempt) {
    ++trials_;
    StandardForm sf;
    sf.a = diag(rng_);
    sf.b = diag(rng_);
    const double bound = std::sqrt(sf.a * sf.b);
    sf.c_plus = bound * unit(rng_);
    sf.c_minus = bound * unit(rng_);
    if (is_physical(sf, 0.0)) {
      ++accepted_;
      return sf.canonical();
    }
  }
  throw Error(ErrorKind::configuration, "rejection sampler found no physical state in 10^6 trials");
}

double StandardFormSampler::acceptance_rate() const {
  return trials_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(trials_);
}

SampleBatch random_standard_form(const SampleConfig& cfg) {
  StandardFormSampler sampler(cfg);
  SampleBatch batch;
  batch.states.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) batch.states.push_back(sampler.next());
  batch.trials = sampler.trials();
  batch.acceptance_rate = sampler.acceptance_rate();
  return batch;
}

std::vector<PurityPoint> random_purity_triples(const SampleConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> marginal(1.0 / (2.0 * cfg.a_max), 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PurityPoint> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i) {
    PurityPoint p;
    p.mu1 = marginal(rng);
    p.mu2 = marginal(rng);
    const double lo = p.mu1 * p.mu2;
    const double hi = max_global_purity(p.mu1, p.mu2);
    p.mu = lo + (hi - lo) * unit(rng);
    out.push_back(p);
  }
  return out;
}

BoundsReport validate_bounds(std::span<const PurityPoint> samples, double tol) {
  BoundsReport report;
  report.config.tolerance = tol;
  report.config.count = samples.size();
  report.samples = samples.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  report.worst_delta_min_margin = inf;
  report.worst_delta_max_margin = inf;
  report.worst_en_min_margin = inf;
  report.worst_en_max_margin = inf;
  report.worst_purity_margin = inf;

  for (const PurityPoint& p : samples) {
    const double lower = p.mu - p.mu1 * p.mu2;
    const double upper = max_global_purity(p.mu1, p.mu2) - p.mu;
    report.worst_purity_margin = std::min({report.worst_purity_margin, lower, upper});
    if (lower < -tol || upper < -tol) {
      ++report.purity_violations;
      continue;
    }

    if (!p.delta) throw Error(ErrorKind::malformed_input, "validation sample carries no Delta");
    const DeltaBounds bounds = delta_bounds(p.mu1, p.mu2, p.mu, tol);
    const double delta = *p.delta;
    const double slack = tol;
    report.worst_delta_min_margin = std::min(report.worst_delta_min_margin, delta - bounds.min);
    report.worst_delta_max_margin = std::min(report.worst_delta_max_margin, bounds.max - delta);
    if (delta < bounds.min - slack || delta > bounds.max + slack) ++report.delta_violations;

    // Exact E_N from the global-invariant pipeline, bypassing range checks.
    double n_tilde = 0.0;
    try {
      n_tilde = symplectic_spectrum(invariants(p), true).n_minus;
    } catch (const Error&) {
      ++report.en_violations;
      continue;
    }
    const double exact = log_negativity(n_tilde);
    const EstimateResult est = estimate(p.mu1, p.mu2, p.mu, tol);
    report.worst_en_min_margin = std::min(report.worst_en_min_margin, exact - est.en_min);
    report.worst_en_max_margin = std::min(report.worst_en_max_margin, est.en_max - exact);
    if (exact < est.en_min - tol || exact > est.en_max + tol) ++report.en_violations;

    const bool separable = n_tilde >= 0.5 - tol;
    if ((est.region == Region::separable && !separable) ||
        (est.region == Region::entangled && separable))
      ++report.classification_violations;
  }
  return report;
}

BoundsReport validate_bounds(const SampleConfig& cfg) {
  const SampleBatch batch = random_standard_form(cfg);
  std::vector<PurityPoint> points;
  points.reserve(batch.states.size());
  for (const StandardForm& sf : batch.states) points.push_back(purity_point(sf, cfg.tolerance));
  BoundsReport report = validate_bounds(points, cfg.tolerance);
  report.config = cfg;
  report.acceptance_rate = batch.acceptance_rate;
  return report;
}

double spectral_log_negativity(const StandardForm& sf, double tol) {
  return log_negativity(ppt_smallest_eigenvalue(from_standard_form(sf, tol), tol));
}

CrosscheckReport crosscheck_closed_forms(std::span<const PurityPoint> triples, double tol) {
  CrosscheckReport report;
  report.config.tolerance = tol;
  report.config.count = triples.size();
  report.triples = triples.size();
  for (const PurityPoint& p : triples) {
    const StandardForm most = gmems(p.mu1, p.mu2, p.mu, tol);
    const double dev_max = std::abs(en_max(p.mu1, p.mu2, p.mu, tol) - spectral_log_negativity(most, tol));
    const double dev_min = std::abs(en_min(p.mu1, p.mu2, p.mu, tol) -
                                    spectral_log_negativity(least_entangled(p.mu1, p.mu2, p.mu, tol), tol));
    const StandardForm rebuilt = squeezed_thermal(gmems_squeezing(p.mu1, p.mu2, p.mu, tol));
    const double scale = std::max({1.0, most.a, most.b});
    const double dev_sq = std::max({std::abs(rebuilt.a - most.a), std::abs(rebuilt.b - most.b),
                                    std::abs(rebuilt.c_plus - most.c_plus),
                                    std::abs(rebuilt.c_minus - most.c_minus)}) /
                          scale;
    report.max_en_max_deviation = std::max(report.max_en_max_deviation, dev_max);
    report.max_en_min_deviation = std::max(report.max_en_min_deviation, dev_min);
    report.max_squeezing_deviation = std::max(report.max_squeezing_deviation, dev_sq);
    if (dev_max > tol || dev_min > tol || dev_sq > tol) ++report.failures;
  }
  return report;
}

CrosscheckReport crosscheck_closed_forms(const SampleConfig& cfg) {
  const std::vector<PurityPoint> triples = random_purity_triples(cfg);
  CrosscheckReport report = crosscheck_closed_forms(triples, cfg.tolerance);
  report.config = cfg;
  return report;
}

}  // namespace gce
