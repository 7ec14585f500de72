#include "gce/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "gce/param.hpp"

namespace gce {

double en_max(double mu1, double mu2, double mu, double tol) {
  require_purity_constraints(mu1, mu2, mu, tol);
  const double m12 = mu1 * mu2;
  const double sm = mu1 + mu2;
  const double radical = std::sqrt(std::max(0.0, sm * sm - 4.0 * m12 * m12 / mu));
  // -1/mu + sm (sm - radical)/(2 m12²) rationalises to [2 m12/(mu (sm + radical))]²,
  // which avoids the cancellation in sm - radical for strongly mixed marginals.
  return std::max(0.0, std::log(mu * (sm + radical) / (2.0 * m12)));
}

double en_min(double mu1, double mu2, double mu, double tol) {
  if (classify(mu1, mu2, mu, tol) != Region::entangled) return 0.0;
  const double s = 1.0 / (mu1 * mu1) + 1.0 / (mu2 * mu2) - 1.0 / (2.0 * mu * mu) - 0.5;
  const double inv_mu_sq = 1.0 / (mu * mu);
  const double radical = std::sqrt(std::max(0.0, s * s - inv_mu_sq));
  // s - sqrt(s² - 1/mu²) = (1/mu²) / (s + sqrt(s² - 1/mu²))
  const double bracket = inv_mu_sq / (s + radical);
  return std::max(0.0, -0.5 * std::log(bracket));
}

EstimateResult estimate(double mu1, double mu2, double mu, double tol) {
  EstimateResult out;
  out.region = classify(mu1, mu2, mu, tol);
  out.en_max = en_max(mu1, mu2, mu, tol);
  out.en_min = en_min(mu1, mu2, mu, tol);
  out.en_avg = 0.5 * (out.en_max + out.en_min);
  const double total = out.en_max + out.en_min;
  out.rel_err = total > 0.0 ? (out.en_max - out.en_min) / total : 0.0;
  return out;
}

EntanglementReport entanglement_report(const PurityPoint& p, double tol) {
  const EstimateResult est = estimate(p.mu1, p.mu2, p.mu, tol);
  EntanglementReport report;
  report.region = est.region;
  report.en_max = est.en_max;
  report.en_min = est.en_min;
  report.en_avg = est.en_avg;
  report.rel_err = est.rel_err;
  if (p.delta) {
    report.n_tilde_minus = ppt_smallest_eigenvalue(p, tol);
    report.log_negativity = log_negativity(*report.n_tilde_minus);
  }
  return report;
}

}  // namespace gce
