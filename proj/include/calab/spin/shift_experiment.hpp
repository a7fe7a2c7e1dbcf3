#pragma once

#include <cstddef>

#include "calab/approx/growth.hpp"

namespace calab::spin {

inline constexpr std::size_t kMaxShiftPhases = 8;
inline constexpr std::size_t kMaxShiftHorizon = 12;

// Probe set of m unit vectors cos(2 pi j/m) U + sin(2 pi j/m) V in one site of
// the Pauli span, iterated by the tensor shift. Each horizon n runs the comb
// packing and reports log d with d >= ceil(delta^2 |Q_n| / (2 pi)). The
// sequence certifies lower slopes only.
approx::GrowthSequence shift_growth_experiment(std::size_t m, std::size_t n_max, double delta = 0.05);

}  // namespace calab::spin
