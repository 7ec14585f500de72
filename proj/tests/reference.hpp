#pragma once

// Dense-matrix reference computations, independent of the invariant formulas
// used by the library. Symplectic eigenvalues come from the eigenvalues of
// i*Omega*sigma, partial transposition from the explicit mirror p2 -> -p2.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "gce/core.hpp"

namespace gce::reference {

inline Eigen::Matrix4d to_eigen(const CovarianceMatrix& cm) {
  Eigen::Matrix4d m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = cm(i, j);
  return m;
}

inline CovarianceMatrix from_eigen(const Eigen::Matrix4d& m) {
  CovarianceMatrix cm;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) cm(i, j) = m(i, j);
  return cm;
}

inline Eigen::Matrix4d omega() {
  Eigen::Matrix4d w = Eigen::Matrix4d::Zero();
  w(0, 1) = 1.0;
  w(1, 0) = -1.0;
  w(2, 3) = 1.0;
  w(3, 2) = -1.0;
  return w;
}

/// Sorted symplectic eigenvalues (n-, n+) as moduli of eig(Omega sigma).
inline std::array<double, 2> symplectic_eigenvalues(const Eigen::Matrix4d& sigma) {
  Eigen::EigenSolver<Eigen::Matrix4d> solver(omega() * sigma, false);
  std::array<double, 4> moduli{};
  for (int i = 0; i < 4; ++i) moduli[i] = std::abs(solver.eigenvalues()[i]);
  std::sort(moduli.begin(), moduli.end());
  return {0.5 * (moduli[0] + moduli[1]), 0.5 * (moduli[2] + moduli[3])};
}

inline Eigen::Matrix4d partial_transpose(const Eigen::Matrix4d& sigma) {
  const Eigen::Vector4d mirror(1.0, 1.0, 1.0, -1.0);
  return mirror.asDiagonal() * sigma * mirror.asDiagonal();
}

/// Smallest eigenvalue of the symmetric matrix.
inline double min_eigenvalue(const Eigen::Matrix4d& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(sigma, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

/// Bona fide test sigma + i Omega/2 >= 0, checked on its Hermitian eigenvalues.
inline double heisenberg_min_eigenvalue(const Eigen::Matrix4d& sigma) {
  Eigen::Matrix4cd h = sigma.cast<std::complex<double>>();
  h += std::complex<double>(0.0, 0.5) * omega().cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

inline double log_negativity(const Eigen::Matrix4d& sigma) {
  const double n = symplectic_eigenvalues(partial_transpose(sigma))[0];
  return std::max(0.0, -std::log(2.0 * n));
}

/// Random local symplectic S1 (+) S2: rotation * single-mode squeeze * rotation.
template <class Rng>
Eigen::Matrix4d random_local_symplectic(Rng& rng, double max_squeeze = 1.0) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
  auto single = [&] {
    auto rot = [](double t) {
      Eigen::Matrix2d r;
      r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
      return r;
    };
    const double s = squeeze(rng);
    Eigen::Matrix2d sq = Eigen::Vector2d(std::exp(s), std::exp(-s)).asDiagonal();
    return Eigen::Matrix2d(rot(angle(rng)) * sq * rot(angle(rng)));
  };
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  out.block<2, 2>(0, 0) = single();
  out.block<2, 2>(2, 2) = single();
  return out;
}

inline CovarianceMatrix::Rows to_rows(const Eigen::Matrix4d& m) {
  CovarianceMatrix::Rows rows{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace gce::reference
