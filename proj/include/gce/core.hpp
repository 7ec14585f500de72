#pragma once

#include <array>
#include <optional>
#include <string>

#include "gce/error.hpp"

namespace gce {

/// Real symmetric 4x4 covariance matrix of a zero-mean two-mode Gaussian
/// state, ordered (x1, p1, x2, p2). Vacuum is I/2.
class CovarianceMatrix {
 public:
  using Rows = std::array<std::array<double, 4>, 4>;

  CovarianceMatrix() = default;
  explicit CovarianceMatrix(const Rows& entries) : m_(entries) {}

  static CovarianceMatrix vacuum();
  static CovarianceMatrix diagonal(double v1, double v2, double v3, double v4);

  double operator()(int i, int j) const { return m_[i][j]; }
  double& operator()(int i, int j) { return m_[i][j]; }
  const Rows& rows() const { return m_; }

  /// 2x2 blocks of the partition [[alpha, gamma], [gamma^T, beta]].
  std::array<double, 4> alpha() const;
  std::array<double, 4> beta() const;
  std::array<double, 4> gamma() const;

  bool is_symmetric(double tol = kDefaultTolerance) const;

  /// S^T * sigma * S for a 4x4 transformation S.
  CovarianceMatrix congruence(const Rows& s) const;

  /// Time reversal of mode 2 (p2 -> -p2).
  CovarianceMatrix partial_transpose() const;

  friend bool operator==(const CovarianceMatrix&, const CovarianceMatrix&) = default;

 private:
  Rows m_{};
};

/// Standard form (a, b, c+, c-): alpha = diag{a,a}, beta = diag{b,b},
/// gamma = diag{c+, c-}. Canonical orientation is c+ >= |c-|.
struct StandardForm {
  double a = 0.5;
  double b = 0.5;
  double c_plus = 0.0;
  double c_minus = 0.0;

  /// Same state up to local rotations, reoriented so that c+ >= |c-|.
  StandardForm canonical() const;
};

/// Local and global Sp(4,R) invariants.
struct Invariants {
  double det_alpha = 0.0;
  double det_beta = 0.0;
  double det_gamma = 0.0;
  double det_sigma = 0.0;
  double delta = 0.0;  // det_alpha + det_beta + 2 det_gamma

  /// Seralian of the partially transposed state.
  double delta_transposed() const { return delta - 4.0 * det_gamma; }
};

struct SymplecticSpectrum {
  double n_minus = 0.5;
  double n_plus = 0.5;
  bool transposed = false;
};

struct PhysicalityCheck {
  bool physical = false;
  // Empty when physical; otherwise one of "symmetric", "positive definite",
  // "det sigma", "symplectic spectrum" (the first check that failed).
  std::string failed_check;
  std::optional<double> n_minus;

  explicit operator bool() const { return physical; }
};

/// Global and marginal purities; delta is the seralian when known.
struct PurityPoint {
  double mu1 = 1.0;
  double mu2 = 1.0;
  double mu = 1.0;
  std::optional<double> delta;
};

Invariants invariants(const CovarianceMatrix& cm, double tol = kDefaultTolerance);
Invariants invariants(const StandardForm& sf);

/// 2 n∓² = Δ ∓ sqrt(Δ² − 4 Det σ), with Δ̃ in place of Δ when transposed.
SymplecticSpectrum symplectic_spectrum(const Invariants& inv, bool transposed = false);

PhysicalityCheck is_physical(const CovarianceMatrix& cm, double tol = kDefaultTolerance);
PhysicalityCheck is_physical(const StandardForm& sf, double tol = kDefaultTolerance);

PurityPoint purities(const CovarianceMatrix& cm, double tol = kDefaultTolerance);

StandardForm to_standard_form(const CovarianceMatrix& cm, double tol = kDefaultTolerance);
CovarianceMatrix from_standard_form(const StandardForm& sf, double tol = kDefaultTolerance);

namespace detail {

/// sqrt of a radicand, mapping small negatives (relative to scale) to zero.
/// Returns nullopt when the radicand is negative beyond that slack.
std::optional<double> clamped_sqrt(double radicand, double scale);

/// Smaller root x of 2x² = s − sqrt(s² − 4p), evaluated without cancellation.
double smaller_symplectic_square(double s, double radical, double p);

}  // namespace detail

}  // namespace gce
