#pragma once

#include "gce/core.hpp"

namespace gce {

/// Two-mode squeezing r applied to thermal eigenvalues nu = diag{n-, n-, n+, n+}.
/// n_minus sits on mode 1 and n_plus on mode 2; either may be the larger.
struct SqueezedThermalParams {
  double r = 0.0;
  double n_minus = 0.5;
  double n_plus = 0.5;
};

/// Maximally entangled mixed state at fixed purities (Delta at its lower bound).
StandardForm gmems(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// True where the Heisenberg value (1 + 1/mu²)/4 is the active upper bound on Delta.
bool heisenberg_branch_active(double mu1, double mu2, double mu,
                              double tol = kDefaultTolerance);

/// Least entangled mixed state from its closed form. Throws inactive_branch when
/// the Heisenberg branch is not the active upper bound.
StandardForm glems(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// State at Delta = delta_max for any valid purities: glems where the Heisenberg
/// branch is active, otherwise the generic inversion.
StandardForm least_entangled(double mu1, double mu2, double mu,
                             double tol = kDefaultTolerance);

/// Maximally entangled state for fixed marginals.
StandardForm gmemms(double mu1, double mu2, double tol = kDefaultTolerance);

StandardForm squeezed_thermal(const SqueezedThermalParams& params);

/// Squeezed-thermal parameters reproducing gmems(mu1, mu2, mu).
SqueezedThermalParams gmems_squeezing(double mu1, double mu2, double mu,
                                      double tol = kDefaultTolerance);

}  // namespace gce
