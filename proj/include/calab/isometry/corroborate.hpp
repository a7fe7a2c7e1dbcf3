#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "calab/approx/growth.hpp"
#include "calab/isometry/classify.hpp"
#include "calab/l1/witness.hpp"

namespace calab::isometry {

enum class SequenceSpace { L1, Linfty };

const char* to_string(SequenceSpace s);

struct CorroborationOptions {
  SequenceSpace space = SequenceSpace::L1;
  Field field = Field::Complex;
  std::size_t m = 4;       // probe vectors: phases for l1, symbols for l_inf
  std::size_t n_max = 12;  // growth horizon
  // Zero verdicts: witness search on the orbit of e_probe.
  double K = 1.5;
  l1::Density density{1, 4};
  std::size_t orbit_length = 16;
  std::optional<long long> probe;  // defaults to the window's first point
  l1::WitnessOptions witness;
};

struct CorroborationReport {
  SequenceSpace space = SequenceSpace::L1;
  Classification classification;
  std::optional<approx::GrowthSequence> growth;  // Infinite verdicts
  std::optional<l1::WitnessReport> witness;      // Zero verdicts
  bool corroborated = false;  // positive final slope, or no witness found
  std::vector<long long> support;  // window points carrying the probe vectors
};

// Infinite verdicts: the truncated isometry lambda(s) x(sigma(s)) on the
// window, probe vectors built along orbit segments, and hc_growth in Lower
// mode with the packing rule. On l1 the probes are m phase multiples of one
// basis vector whose backward orbit stays in the window (over the reals m
// must be 2: {e, -e}). On l_inf, x_j carries conjugated phase products on
// disjoint orbit segments, one segment of length n per word f of length n,
// at the positions where f(k) = j.
// Zero verdicts: find_l1_witness on the orbit e_probe, alpha e_probe, ...
// Throws InsufficientWindow when the window cannot host the construction.
CorroborationReport empirical_corroboration(const PermutationSpec& spec, const PhaseSpec& phases, long long lo,
                                            long long hi, double delta, double a,
                                            const CorroborationOptions& options = {});

}  // namespace calab::isometry
