#include "gce/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace gce {

namespace {

double det2(double a00, double a01, double a10, double a11) {
  return a00 * a11 - a01 * a10;
}

double det3(const CovarianceMatrix::Rows& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) -
         m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

// Gaussian elimination with partial pivoting. Squeezed states have entries
// far larger than Det sigma, and a cofactor expansion loses digits to
// cancellation between its terms.
double det4(CovarianceMatrix::Rows m) {
  double det = 1.0;
  for (int k = 0; k < 4; ++k) {
    int pivot = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
    if (m[pivot][k] == 0.0) return 0.0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (int i = k + 1; i < 4; ++i) {
      const double f = m[i][k] / m[k][k];
      for (int j = k + 1; j < 4; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

double max_abs_entry(const CovarianceMatrix& cm) {
  double s = 0.0;
  for (const auto& row : cm.rows())
    for (double v : row) s = std::max(s, std::abs(v));
  return s;
}

CovarianceMatrix embed(const StandardForm& sf) {
  CovarianceMatrix cm;
  cm(0, 0) = cm(1, 1) = sf.a;
  cm(2, 2) = cm(3, 3) = sf.b;
  cm(0, 2) = cm(2, 0) = sf.c_plus;
  cm(1, 3) = cm(3, 1) = sf.c_minus;
  return cm;
}

std::string describe(const PhysicalityCheck& check) {
  std::ostringstream os;
  os << "covariance matrix is unphysical: failed " << check.failed_check << " check";
  if (check.n_minus) os << " (n- = " << *check.n_minus << ")";
  return os.str();
}

}  // namespace

namespace detail {

std::optional<double> clamped_sqrt(double radicand, double scale) {
  if (radicand >= 0.0) return std::sqrt(radicand);
  if (radicand >= -kRadicandRelTol * std::max(std::abs(scale), 1.0)) return 0.0;
  return std::nullopt;
}

double smaller_symplectic_square(double s, double radical, double p) {
  // 2x² = s − radical = 4p / (s + radical)
  return 2.0 * p / (s + radical);
}

}  // namespace detail

CovarianceMatrix CovarianceMatrix::vacuum() { return diagonal(0.5, 0.5, 0.5, 0.5); }

CovarianceMatrix CovarianceMatrix::diagonal(double v1, double v2, double v3, double v4) {
  CovarianceMatrix cm;
  cm.m_[0][0] = v1;
  cm.m_[1][1] = v2;
  cm.m_[2][2] = v3;
  cm.m_[3][3] = v4;
  return cm;
}

std::array<double, 4> CovarianceMatrix::alpha() const {
  return {m_[0][0], m_[0][1], m_[1][0], m_[1][1]};
}

std::array<double, 4> CovarianceMatrix::beta() const {
  return {m_[2][2], m_[2][3], m_[3][2], m_[3][3]};
}

std::array<double, 4> CovarianceMatrix::gamma() const {
  return {m_[0][2], m_[0][3], m_[1][2], m_[1][3]};
}

bool CovarianceMatrix::is_symmetric(double tol) const {
  const double scale = std::max(1.0, max_abs_entry(*this));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!(std::abs(m_[i][j] - m_[j][i]) <= tol * scale)) return false;
  return true;
}

CovarianceMatrix CovarianceMatrix::congruence(const Rows& s) const {
  Rows tmp{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) tmp[i][j] += m_[i][k] * s[k][j];
  CovarianceMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) out.m_[i][j] += s[k][i] * tmp[k][j];
  return out;
}

CovarianceMatrix CovarianceMatrix::partial_transpose() const {
  CovarianceMatrix out = *this;
  for (int i = 0; i < 4; ++i) {
    if (i == 3) continue;
    out.m_[i][3] = -out.m_[i][3];
    out.m_[3][i] = -out.m_[3][i];
  }
  return out;
}

StandardForm StandardForm::canonical() const {
  StandardForm out = *this;
  // Rotating both modes by pi/2 swaps c+ and c-; rotating one mode by pi
  // flips both signs.
  if (std::abs(out.c_minus) > std::abs(out.c_plus)) std::swap(out.c_plus, out.c_minus);
  if (out.c_plus < 0.0) {
    out.c_plus = -out.c_plus;
    out.c_minus = -out.c_minus;
  }
  return out;
}

Invariants invariants(const CovarianceMatrix& cm, double tol) {
  if (!cm.is_symmetric(tol))
    throw Error(ErrorKind::malformed_input, "covariance matrix is not symmetric");
  const auto al = cm.alpha();
  const auto be = cm.beta();
  const auto ga = cm.gamma();
  Invariants inv;
  inv.det_alpha = det2(al[0], al[1], al[2], al[3]);
  inv.det_beta = det2(be[0], be[1], be[2], be[3]);
  inv.det_gamma = det2(ga[0], ga[1], ga[2], ga[3]);
  inv.det_sigma = det4(cm.rows());
  inv.delta = inv.det_alpha + inv.det_beta + 2.0 * inv.det_gamma;
  return inv;
}

Invariants invariants(const StandardForm& sf) {
  Invariants inv;
  const double ab = sf.a * sf.b;
  const double cc = sf.c_plus * sf.c_minus;
  inv.det_alpha = sf.a * sf.a;
  inv.det_beta = sf.b * sf.b;
  inv.det_gamma = cc;
  // (ab)² − ab(c+² + c-²) + (c+c-)², factored
  inv.det_sigma = (ab - sf.c_plus * sf.c_plus) * (ab - sf.c_minus * sf.c_minus);
  inv.delta = inv.det_alpha + inv.det_beta + 2.0 * cc;
  return inv;
}

SymplecticSpectrum symplectic_spectrum(const Invariants& inv, bool transposed) {
  const double delta = transposed ? inv.delta_transposed() : inv.delta;
  if (!(inv.det_sigma > 0.0) || !(delta > 0.0))
    throw Error(ErrorKind::unphysical,
                "symplectic spectrum requires Det sigma > 0 and Delta > 0");
  const auto radical = detail::clamped_sqrt(delta * delta - 4.0 * inv.det_sigma, delta * delta);
  if (!radical)
    throw Error(ErrorKind::unphysical, "negative radicand Delta^2 - 4 Det sigma");
  SymplecticSpectrum spec;
  spec.transposed = transposed;
  spec.n_minus = std::sqrt(detail::smaller_symplectic_square(delta, *radical, inv.det_sigma));
  spec.n_plus = std::sqrt(0.5 * (delta + *radical));
  return spec;
}

PhysicalityCheck is_physical(const CovarianceMatrix& cm, double tol) {
  PhysicalityCheck check;
  if (!cm.is_symmetric(tol)) {
    check.failed_check = "symmetric";
    return check;
  }
  const auto& m = cm.rows();
  const double minors[] = {
      m[0][0],
      det2(m[0][0], m[0][1], m[1][0], m[1][1]),
      det3(m),
      det4(m),
  };
  for (double minor : minors) {
    if (!(minor > 0.0)) {
      check.failed_check = "positive definite";
      return check;
    }
  }
  const Invariants inv = invariants(cm, tol);
  if (!(inv.det_sigma > 0.0)) {
    check.failed_check = "det sigma";
    return check;
  }
  // Delta sums 2x2 determinants of entries up to max|entry|, so its rounding
  // grows with the square of the largest entry.
  const double entry = max_abs_entry(cm);
  const double rounding = std::max(inv.delta * inv.delta, entry * entry);
  const auto radical = detail::clamped_sqrt(inv.delta * inv.delta - 4.0 * inv.det_sigma, rounding);
  if (!radical) {
    check.failed_check = "symplectic spectrum";
    return check;
  }
  check.n_minus = std::sqrt(detail::smaller_symplectic_square(inv.delta, *radical, inv.det_sigma));
  // n- >= 1/2 tested as (4n-² - 1)(4n+² - 1) = 16 Det σ - 4Δ + 1 >= 0 with
  // 4n-² + 4n+² = 4Δ >= 2. Near pure states the square root in the spectrum
  // inflates rounding to ~1e-8; this form does not.
  const double excess_plus = 2.0 * (inv.delta + *radical) - 1.0;
  const double product = 16.0 * inv.det_sigma - 4.0 * inv.delta + 1.0;
  const double scale = 16.0 * inv.det_sigma + 4.0 * inv.delta + 1.0 + rounding;
  const bool saturating_ok =
      product >= -4.0 * tol * std::max(excess_plus, 0.0) - kRadicandRelTol * scale;
  if (inv.delta < 0.5 - tol || !saturating_ok) {
    check.failed_check = "symplectic spectrum";
    return check;
  }
  check.physical = true;
  return check;
}

PhysicalityCheck is_physical(const StandardForm& sf, double tol) {
  return is_physical(embed(sf), tol);
}

PurityPoint purities(const CovarianceMatrix& cm, double tol) {
  if (const auto check = is_physical(cm, tol); !check)
    throw Error(ErrorKind::unphysical, describe(check));
  const Invariants inv = invariants(cm, tol);
  PurityPoint p;
  p.mu = 1.0 / (4.0 * std::sqrt(inv.det_sigma));
  p.mu1 = 1.0 / (2.0 * std::sqrt(inv.det_alpha));
  p.mu2 = 1.0 / (2.0 * std::sqrt(inv.det_beta));
  p.delta = inv.delta;
  return p;
}

StandardForm to_standard_form(const CovarianceMatrix& cm, double tol) {
  if (const auto check = is_physical(cm, tol); !check)
    throw Error(ErrorKind::unphysical, describe(check));
  const Invariants inv = invariants(cm, tol);
  StandardForm sf;
  sf.a = std::sqrt(inv.det_alpha);
  sf.b = std::sqrt(inv.det_beta);
  const double ab = sf.a * sf.b;
  const double s = inv.det_gamma;
  // c+² + c-² from Det σ = (ab)² − ab (c+² + c-²) + (c+ c-)².
  const double q = (ab * ab + s * s - inv.det_sigma) / ab;
  const double scale = std::abs(q) + 2.0 * std::abs(s);
  const auto sum = detail::clamped_sqrt(q + 2.0 * s, scale);   // c+ + c-
  const auto diff = detail::clamped_sqrt(q - 2.0 * s, scale);  // c+ - c-
  if (!sum || !diff)
    throw Error(ErrorKind::unphysical, "inconsistent local invariants: no real c+, c-");
  sf.c_plus = 0.5 * (*sum + *diff);
  sf.c_minus = sf.c_plus > 0.0 ? s / sf.c_plus : 0.0;
  return sf;
}

CovarianceMatrix from_standard_form(const StandardForm& sf, double tol) {
  const CovarianceMatrix cm = embed(sf);
  if (const auto check = is_physical(cm, tol); !check)
    throw Error(ErrorKind::unphysical, describe(check));
  return cm;
}

}  // namespace gce
