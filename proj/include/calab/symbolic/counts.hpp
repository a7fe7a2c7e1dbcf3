#pragma once

#include <cstddef>

#include "calab/symbolic/subshift.hpp"

namespace calab::symbolic {

enum class CountMode { Exact, Greedy };

inline constexpr double kExactWordGuard = 1e6;

struct CountResult {
  std::size_t count = 0;
  bool exact = false;          // optimum proven (search finished within budget)
  std::size_t classes = 0;     // windows up to d_n = 0
  std::size_t nodes = 0;       // branch-and-bound nodes visited
};

struct CountOptions {
  std::size_t node_budget = 2000000;
};

// Largest (n, eps)-separated set (pairwise d_n >= eps). Exact: maximum
// independent set of the "closer than eps" graph by branch and bound; Greedy:
// lexicographic maximal separated set, a lower bound. Exact mode throws
// GuardExceeded when m^window exceeds kExactWordGuard.
CountResult sep_count(const SymbolicSystem& system, std::size_t n, double eps, CountMode mode,
                      const CountOptions& options = {});

// Smallest (n, eps)-spanning set (every window within d_n < eps of a member).
// Exact: minimum dominating set by branch and bound; Greedy: a maximal
// separated set, an upper bound.
CountResult spn_count(const SymbolicSystem& system, std::size_t n, double eps, CountMode mode,
                      const CountOptions& options = {});

}  // namespace calab::symbolic
