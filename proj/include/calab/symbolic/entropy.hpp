#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "calab/symbolic/counts.hpp"

namespace calab::symbolic {

struct OracleResult {
  double log_radius = 0.0;
  double radius = 0.0;
  double lower = 0.0;  // Collatz-Wielandt enclosure of the spectral radius
  double upper = 0.0;
  std::size_t iterations = 0;
};

// log of the spectral radius of a 0/1 matrix: the largest Perron root over its
// strongly connected components, each by power iteration on B + I with
// Collatz-Wielandt bounds to relative tolerance tol. Throws EmptySystem for a
// nilpotent matrix.
OracleResult sft_entropy_oracle(const TransitionMatrix& a, double tol = 1e-10);

struct EntropyCell {
  std::size_t n = 0;
  double eps = 0.0;
  CountResult sep;
  CountResult spn;
  double sep_rate = 0.0;  // (1/n) log sep
  double spn_rate = 0.0;
};

struct EntropyEstimate {
  std::vector<EntropyCell> cells;
  // sep_rate at the largest n and smallest eps of the schedule.
  double extrapolated = 0.0;
  std::optional<double> oracle;
  bool spn_le_sep = true;
};

// Cells for every (n, eps) pair, evaluated in parallel. Throws InvalidArgument
// for empty schedules or an eps schedule that is not strictly decreasing.
EntropyEstimate entropy_estimate(const SymbolicSystem& system, const std::vector<std::size_t>& n_schedule,
                                 const std::vector<double>& eps_schedule, CountMode mode = CountMode::Exact,
                                 const CountOptions& options = {});

}  // namespace calab::symbolic
