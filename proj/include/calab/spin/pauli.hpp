#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "calab/normed/matrix.hpp"

namespace calab::spin {

inline constexpr std::size_t kMaxCrosscheckSites = 10;

// Real coefficients (c_k, d_k) of sum_k c_k U_k + d_k V_k, where U_k and V_k
// are diag(1, -1) and the swap [[0, 1], [1, 0]] acting on site k.
using PauliCoefficients = std::vector<std::pair<double, double>>;

struct PauliSpanNorm {
  double formula = 0.0;                // sum_k sqrt(c_k^2 + d_k^2)
  std::optional<double> matrix_norm;   // spectral norm of the 2^n x 2^n operator
};

// Throws InvalidArgument for an empty or non-finite coefficient list and
// GuardExceeded when crosscheck is requested above kMaxCrosscheckSites.
PauliSpanNorm pauli_span_norm(const PauliCoefficients& coeffs, bool crosscheck);

// The 2^n x 2^n operator, built factor by factor with kron.
normed::Matrix pauli_span_operator(const PauliCoefficients& coeffs);

}  // namespace calab::spin
