#pragma once

#include <optional>
#include <string_view>

#include "gce/core.hpp"

namespace gce {

enum class Region { separable, coexistence, entangled };

std::string_view to_string(Region region) noexcept;

/// Full characterization of a state, or of a purity point when Delta is unknown.
struct EntanglementReport {
  Region region = Region::separable;
  std::optional<double> n_tilde_minus;
  std::optional<double> log_negativity;
  double en_max = 0.0;
  double en_min = 0.0;
  double en_avg = 0.0;
  double rel_err = 0.0;
};

/// Largest mu at which every state with these marginals is separable.
double separable_threshold(double mu1, double mu2);

/// Largest mu at which the least entangled state is still separable.
double coexistence_threshold(double mu1, double mu2);

/// Smallest symplectic eigenvalue of the partial transpose, from (mu1, mu2, mu, Delta).
double ppt_smallest_eigenvalue(const PurityPoint& p, double tol = kDefaultTolerance);

/// Same quantity read off a covariance matrix through its invariants.
double ppt_smallest_eigenvalue(const CovarianceMatrix& cm, double tol = kDefaultTolerance);

/// E_N = max{0, -ln(2 n~-)}.
double log_negativity(double n_tilde_minus);

bool is_separable(const PurityPoint& p, double tol = kDefaultTolerance);
bool is_separable(const CovarianceMatrix& cm, double tol = kDefaultTolerance);

Region classify(double mu1, double mu2, double mu, double tol = kDefaultTolerance);

/// d(n~-²)/dDelta at fixed purities: 1/2 (Delta~/sqrt(Delta~² - 1/4mu²) - 1).
double analytic_delta_slope(double delta_tilde, double mu);

struct SlopeCheck {
  double finite_difference = 0.0;
  double analytic = 0.0;
};

/// Central difference of n~-² in Delta with step h, against the closed form.
SlopeCheck delta_monotonicity_check(const PurityPoint& p, double h,
                                    double tol = kDefaultTolerance);

}  // namespace gce
