#include "gce/extremal.hpp"

#include <algorithm>
#include <cmath>

#include "gce/param.hpp"

namespace gce {

namespace {

// Radicands here are nonnegative throughout the valid region; negatives
// only arise from rounding on its boundary.
double boundary_sqrt(double radicand) { return std::sqrt(std::max(0.0, radicand)); }

}  // namespace

StandardForm gmems(double mu1, double mu2, double mu, double tol) {
  require_purity_constraints(mu1, mu2, mu, tol);
  const double inv_prod = 1.0 / (mu1 * mu2);
  const double inv_mu = 1.0 / mu;
  const double c = 0.5 * boundary_sqrt(inv_prod - inv_mu);
  return {1.0 / (2.0 * mu1), 1.0 / (2.0 * mu2), c, -c};
}

bool heisenberg_branch_active(double mu1, double mu2, double mu, double tol) {
  const double heisenberg = 0.25 * (1.0 + 1.0 / (mu * mu));
  const double sm = mu1 + mu2;
  const double other = sm * sm / (4.0 * mu1 * mu1 * mu2 * mu2) - 1.0 / (2.0 * mu);
  return heisenberg <= other + tol * std::max(1.0, other);
}

StandardForm glems(double mu1, double mu2, double mu, double tol) {
  require_purity_constraints(mu1, mu2, mu, tol);
  if (!heisenberg_branch_active(mu1, mu2, mu, tol))
    throw Error(ErrorKind::inactive_branch,
                "Heisenberg bound is not the active upper bound on Delta at these purities");
  const double m12 = mu1 * mu2;
  const double mu_sq = mu * mu;
  const double dm = mu1 - mu2;
  const double sm = mu1 + mu2;

  const double t = 1.0 + 1.0 / mu_sq - dm * dm / (m12 * m12);
  const double first_sq = m12 * (t - 2.0 / mu) * (t + 2.0 / mu);
  const double first = boundary_sqrt(first_sq) / 8.0;

  const double h = (1.0 + mu_sq) * m12 * m12 - mu_sq * sm * sm;
  const double h_term = h * h / (mu_sq * m12 * m12 * m12);
  const double second_sq = h_term - 4.0 * m12;
  const double second = boundary_sqrt(second_sq) / (8.0 * mu);

  return {1.0 / (2.0 * mu1), 1.0 / (2.0 * mu2), first + second, first - second};
}

StandardForm least_entangled(double mu1, double mu2, double mu, double tol) {
  if (heisenberg_branch_active(mu1, mu2, mu, tol)) return glems(mu1, mu2, mu, tol);
  const DeltaBounds bounds = delta_bounds(mu1, mu2, mu, tol);
  return standard_form_from_purities({mu1, mu2, mu, bounds.max}, tol);
}

StandardForm gmemms(double mu1, double mu2, double tol) {
  if (!(mu1 > 0.0 && mu1 <= 1.0 + tol && mu2 > 0.0 && mu2 <= 1.0 + tol))
    throw Error(ErrorKind::out_of_region, "marginal purities must lie in (0, 1]");
  const double mu = max_global_purity(mu1, mu2);
  // GMEMS and GLEMS coincide where the Delta bounds pinch together. Comparing
  // their c± directly would lose half the digits to a vanishing radicand.
  const DeltaBounds bounds = delta_bounds(mu1, mu2, mu, tol);
  if (!heisenberg_branch_active(mu1, mu2, mu, tol) ||
      bounds.max - bounds.min > kDefaultTolerance * std::max(1.0, bounds.max))
    throw Error(ErrorKind::unphysical, "GMEMS and GLEMS fail to coincide on the GMEMMS surface");
  const StandardForm most = gmems(mu1, mu2, mu, tol);
  return most;
}

StandardForm squeezed_thermal(const SqueezedThermalParams& params) {
  if (!(params.n_minus >= 0.5 && params.n_plus >= 0.5))
    throw Error(ErrorKind::unphysical, "thermal symplectic eigenvalues must be >= 1/2");
  const double ch = std::cosh(params.r);
  const double sh = std::sinh(params.r);
  const double c = 0.5 * (params.n_minus + params.n_plus) * std::sinh(2.0 * params.r);
  return {params.n_minus * ch * ch + params.n_plus * sh * sh,
          params.n_plus * ch * ch + params.n_minus * sh * sh, c, -c};
}

SqueezedThermalParams gmems_squeezing(double mu1, double mu2, double mu, double tol) {
  const StandardForm sf = gmems(mu1, mu2, mu, tol);
  // tanh 2r = 2 c+ / (a + b) for a squeezed thermal standard form.
  const double m12 = mu1 * mu2;
  const double tanh_2r =
      2.0 * boundary_sqrt(m12 - m12 * m12 / mu) / (mu1 + mu2);

  const SymplecticSpectrum spec = symplectic_spectrum(invariants(sf));
  SqueezedThermalParams out;
  out.r = 0.5 * std::atanh(tanh_2r);
  // a - b = n(mode 1) - n(mode 2)
  if (sf.a <= sf.b) {
    out.n_minus = spec.n_minus;
    out.n_plus = spec.n_plus;
  } else {
    out.n_minus = spec.n_plus;
    out.n_plus = spec.n_minus;
  }
  // Pure limits can round a hair below 1/2.
  out.n_minus = std::max(out.n_minus, 0.5);
  out.n_plus = std::max(out.n_plus, 0.5);
  return out;
}

}  // namespace gce
