#pragma once

#include <cstddef>

#include "calab/normed/matrix.hpp"

namespace calab::normed {

struct SpectralEstimate {
  double value = 0.0;     // largest singular value
  double residual = 0.0;  // ||A v - rho v|| for A = X^H X at the returned v
  std::size_t iterations = 0;
  bool converged = false;
  Vec right;  // unit right singular vector estimate
  Vec left;   // unit left singular vector estimate (X v / ||X v||)
};

// Power iteration on X^H X. Two deterministic starts are run (normalized
// all-ones, then a fixed-seed pseudo-random vector) and the larger Rayleigh
// quotient is kept; iteration stops once the residual falls below
// tol * rho.
SpectralEstimate spectral_norm(const Matrix& x, double tol = 1e-12, std::size_t max_iter = 200000);

}  // namespace calab::normed
