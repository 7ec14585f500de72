#include "gce/entangle.hpp"

#include <cmath>
#include <limits>

#include "gce/param.hpp"

namespace gce {

namespace {

double delta_tilde(const PurityPoint& p) {
  return -*p.delta + 1.0 / (2.0 * p.mu1 * p.mu1) + 1.0 / (2.0 * p.mu2 * p.mu2);
}

// n~-² for a point already known to be in range.
double ppt_square(const PurityPoint& p) {
  const double dt = delta_tilde(p);
  const double quarter_inv_mu2 = 1.0 / (4.0 * p.mu * p.mu);
  const auto radical = detail::clamped_sqrt(dt * dt - quarter_inv_mu2, dt * dt);
  if (!radical || !(dt > 0.0))
    throw Error(ErrorKind::out_of_region, "no real partially transposed spectrum");
  // 2 n~-² = Delta~ - sqrt(Delta~² - 1/4mu²), written as quotient
  return 0.5 * quarter_inv_mu2 / (dt + *radical);
}

void require_in_region(const PurityPoint& p, double tol) {
  // standard_form_from_purities performs the purity and Delta bound checks.
  (void)standard_form_from_purities(p, tol);
}

}  // namespace

std::string_view to_string(Region region) noexcept {
  switch (region) {
    case Region::separable: return "separable";
    case Region::coexistence: return "coexistence";
    case Region::entangled: return "entangled";
  }
  return "unknown";
}

double separable_threshold(double mu1, double mu2) {
  return mu1 * mu2 / (mu1 + mu2 - mu1 * mu2);
}

double coexistence_threshold(double mu1, double mu2) {
  const double p = mu1 * mu2;
  return p / std::sqrt(mu1 * mu1 + mu2 * mu2 - p * p);
}

double ppt_smallest_eigenvalue(const PurityPoint& p, double tol) {
  require_in_region(p, tol);
  return std::sqrt(ppt_square(p));
}

double ppt_smallest_eigenvalue(const CovarianceMatrix& cm, double tol) {
  if (auto check = is_physical(cm, tol); !check)
    throw Error(ErrorKind::unphysical,
                "covariance matrix is unphysical: failed " + check.failed_check + " check");
  return symplectic_spectrum(invariants(cm, tol), true).n_minus;
}

double log_negativity(double n_tilde_minus) {
  if (!(n_tilde_minus > 0.0))
    throw Error(ErrorKind::malformed_input, "symplectic eigenvalue must be positive");
  return std::max(0.0, -std::log(2.0 * n_tilde_minus));
}

bool is_separable(const PurityPoint& p, double tol) {
  return ppt_smallest_eigenvalue(p, tol) >= 0.5 - tol;
}

bool is_separable(const CovarianceMatrix& cm, double tol) {
  return ppt_smallest_eigenvalue(cm, tol) >= 0.5 - tol;
}

Region classify(double mu1, double mu2, double mu, double tol) {
  require_purity_constraints(mu1, mu2, mu, tol);
  if (mu <= separable_threshold(mu1, mu2) + tol) return Region::separable;
  if (mu <= coexistence_threshold(mu1, mu2) + tol) return Region::coexistence;
  return Region::entangled;
}

double analytic_delta_slope(double delta_tilde, double mu) {
  if (std::isinf(delta_tilde)) return 0.0;
  const double k = 1.0 / (4.0 * mu * mu);
  const double radical = std::sqrt(delta_tilde * delta_tilde - k);
  // Delta~/R - 1 = k / (R (Delta~ + R))
  return 0.5 * k / (radical * (delta_tilde + radical));
}

SlopeCheck delta_monotonicity_check(const PurityPoint& p, double h, double tol) {
  if (!(h > 0.0)) throw Error(ErrorKind::malformed_input, "step must be positive");
  if (!p.delta) throw Error(ErrorKind::malformed_input, "purity point carries no seralian Delta");
  PurityPoint lo = p;
  PurityPoint hi = p;
  lo.delta = *p.delta - h;
  hi.delta = *p.delta + h;
  // The step must stay inside the Delta bounds without slack.
  const DeltaBounds bounds = delta_bounds(p.mu1, p.mu2, p.mu, tol);
  if (*lo.delta < bounds.min || *hi.delta > bounds.max)
    throw Error(ErrorKind::out_of_region, "finite-difference step leaves the Delta bounds");
  require_in_region(p, tol);
  SlopeCheck out;
  out.finite_difference = (ppt_square(hi) - ppt_square(lo)) / (2.0 * h);
  out.analytic = analytic_delta_slope(delta_tilde(p), p.mu);
  return out;
}

}  // namespace gce
