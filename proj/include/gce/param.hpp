#pragma once

#include <string>

#include "gce/core.hpp"

namespace gce {

struct DeltaBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Outcome of the purity-region test mu1*mu2 <= mu <= mu1*mu2/(mu1*mu2 + |mu1 - mu2|).
struct PurityCheck {
  enum class Violation { none, range, lower, upper };

  Violation violation = Violation::none;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  std::string message;

  bool ok() const { return violation == Violation::none; }
  explicit operator bool() const { return ok(); }
};

PurityCheck check_purity_constraints(double mu1, double mu2, double mu,
                                     double tol = kDefaultTolerance);

/// Throws out_of_region with the diagnostic message if the check fails.
void require_purity_constraints(double mu1, double mu2, double mu,
                                double tol = kDefaultTolerance);

/// Largest global purity compatible with the marginals.
double max_global_purity(double mu1, double mu2);

DeltaBounds delta_bounds(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// Purities and seralian of a standard form; delta is always populated.
PurityPoint purity_point(const StandardForm& sf, double tol = kDefaultTolerance);

/// Inverse of purity_point. Requires p.delta and Delta inside delta_bounds.
StandardForm standard_form_from_purities(const PurityPoint& p, double tol = kDefaultTolerance);

/// Invariants implied by a purity point (delta required), without range checks.
Invariants invariants(const PurityPoint& p);

}  // namespace gce
