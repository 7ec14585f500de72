#pragma once

#include "gce/core.hpp"
#include "gce/entangle.hpp"

namespace gce {

struct EstimateResult {
  double en_max = 0.0;
  double en_min = 0.0;
  double en_avg = 0.0;
  double rel_err = 0.0;
  Region region = Region::separable;
};

/// Largest logarithmic negativity compatible with the purities (attained by GMEMS).
double en_max(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// Smallest logarithmic negativity compatible with the purities. Nonzero only in
/// the entangled region, where GLEMS attain it.
double en_min(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// Average of the two bounds and their relative spread. rel_err is 0 when
/// both bounds vanish.
EstimateResult estimate(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// Purity-only estimate, plus the exact E_N when p carries Delta.
EntanglementReport entanglement_report(const PurityPoint& p, double tol = kDefaultTolerance);

}  // namespace gce
