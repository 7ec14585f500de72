#include "gce/param.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gce {

namespace {

bool in_unit_interval(double x) { return x > 0.0 && x <= 1.0 + kDefaultTolerance; }

double delta_of(const PurityPoint& p) {
  if (!p.delta)
    throw Error(ErrorKind::malformed_input, "purity point carries no seralian Delta");
  return *p.delta;
}

}  // namespace

double max_global_purity(double mu1, double mu2) {
  const double prod = mu1 * mu2;
  return prod / (prod + std::abs(mu1 - mu2));
}

PurityCheck check_purity_constraints(double mu1, double mu2, double mu, double tol) {
  PurityCheck check;
  if (!in_unit_interval(mu1) || !in_unit_interval(mu2) || !in_unit_interval(mu)) {
    check.violation = PurityCheck::Violation::range;
    check.message = "purities must lie in (0, 1]";
    return check;
  }
  check.lower_bound = mu1 * mu2;
  check.upper_bound = max_global_purity(mu1, mu2);
  std::ostringstream os;
  os.precision(12);
  if (mu < check.lower_bound - tol) {
    check.violation = PurityCheck::Violation::lower;
    os << "violates mu >= mu1*mu2 (no less-pure-than-product states): mu = " << mu << " < "
       << check.lower_bound;
  } else if (mu > check.upper_bound + tol) {
    check.violation = PurityCheck::Violation::upper;
    os << "violates mu <= mu1*mu2/(mu1*mu2 + |mu1 - mu2|): mu = " << mu << " > "
       << check.upper_bound;
  }
  check.message = os.str();
  return check;
}

void require_purity_constraints(double mu1, double mu2, double mu, double tol) {
  if (auto check = check_purity_constraints(mu1, mu2, mu, tol); !check)
    throw Error(ErrorKind::out_of_region, check.message);
}

DeltaBounds delta_bounds(double mu1, double mu2, double mu, double tol) {
  require_purity_constraints(mu1, mu2, mu, tol);
  const double p2 = mu1 * mu1 * mu2 * mu2;
  const double dm = mu1 - mu2;
  const double sm = mu1 + mu2;
  DeltaBounds b;
  b.min = 1.0 / (2.0 * mu) + dm * dm / (4.0 * p2);
  b.max = std::min(sm * sm / (4.0 * p2) - 1.0 / (2.0 * mu), 0.25 * (1.0 + 1.0 / (mu * mu)));
  // On the upper purity boundary the two bounds meet; rounding may cross them.
  if (b.max < b.min) b.max = b.min;
  return b;
}

PurityPoint purity_point(const StandardForm& sf, double tol) {
  if (auto check = is_physical(sf, tol); !check)
    throw Error(ErrorKind::unphysical,
                "standard form is unphysical: failed " + check.failed_check + " check");
  const Invariants inv = invariants(sf);
  PurityPoint p;
  p.mu1 = 1.0 / (2.0 * sf.a);
  p.mu2 = 1.0 / (2.0 * sf.b);
  p.mu = 1.0 / (4.0 * std::sqrt(inv.det_sigma));
  p.delta = inv.delta;
  return p;
}

StandardForm standard_form_from_purities(const PurityPoint& p, double tol) {
  const double delta = delta_of(p);
  const DeltaBounds bounds = delta_bounds(p.mu1, p.mu2, p.mu, tol);
  const double slack = tol;
  if (delta < bounds.min - slack) {
    std::ostringstream os;
    os.precision(12);
    os << "Delta = " << delta << " below its lower bound " << bounds.min;
    throw Error(ErrorKind::out_of_region, os.str());
  }
  if (delta > bounds.max + slack) {
    std::ostringstream os;
    os.precision(12);
    os << "Delta = " << delta << " above its upper bound " << bounds.max;
    throw Error(ErrorKind::out_of_region, os.str());
  }

  const double m1 = p.mu1;
  const double m2 = p.mu2;
  const double mu = p.mu;
  const double m12 = m1 * m2;
  const double shifted = delta - (m1 - m2) * (m1 - m2) / (4.0 * m12 * m12);
  const double half_inv_mu = 1.0 / (2.0 * mu);

  // c+ + c- = sqrt(mu1 mu2 [(Delta - (mu1-mu2)²/4mu1²mu2²)² - 1/4mu²]),
  // difference of squares kept factored.
  const double sum_sq = m12 * (shifted - half_inv_mu) * (shifted + half_inv_mu);

  // c+ - c- = 2 eps, 64 eps² = g²/(mu1 mu2)³ - 4 mu1 mu2/mu²
  const double g = (m1 + m2) * (m1 + m2) - 4.0 * m12 * m12 * delta;
  const double root = std::sqrt(m12);
  const double lhs = g / (m12 * root);
  const double rhs = 2.0 * root / mu;
  const double eps_sq = (lhs - rhs) * (lhs + rhs) / 64.0;

  // Delta passed the bound checks, so residual negatives are rounding.
  const double sum = std::sqrt(std::max(0.0, sum_sq));
  const double eps = std::sqrt(std::max(0.0, eps_sq));

  StandardForm sf;
  sf.a = 1.0 / (2.0 * m1);
  sf.b = 1.0 / (2.0 * m2);
  sf.c_plus = 0.5 * sum + eps;
  sf.c_minus = 0.5 * sum - eps;
  return sf;
}

Invariants invariants(const PurityPoint& p) {
  const double delta = delta_of(p);
  Invariants inv;
  inv.det_alpha = 1.0 / (4.0 * p.mu1 * p.mu1);
  inv.det_beta = 1.0 / (4.0 * p.mu2 * p.mu2);
  inv.det_sigma = 1.0 / (16.0 * p.mu * p.mu);
  inv.det_gamma = 0.5 * (delta - inv.det_alpha - inv.det_beta);
  inv.delta = delta;
  return inv;
}

}  // namespace gce
