#pragma once

#include <cstddef>
#include <optional>
#include <map>
#include <string>
#include <vector>

#include "calab/types.hpp"
#include "json.hpp"

namespace calab::isometry {

enum class DefaultKind { Identity, ShiftBy };

struct DefaultRule {
  DefaultKind kind = DefaultKind::Identity;
  long long t = 0;  // ShiftBy only, nonzero
};

// Block i >= 1 occupies [origin + i(i-1)/2, origin + i(i+1)/2) and is cycled by
// s -> s + 1, with the last point sent back to the first.
struct IncreasingBlocks {
  long long origin = 0;
};

// A permutation sigma of the integers assembled from finite cycles
// (sigma(c_i) = c_{i+1}, cyclically), an optional increasing-block family on
// [origin, inf), and a default rule on the remaining integers. ShiftBy(t)
// moves a point t steps along the remaining integers in increasing order.
class PermutationSpec {
 public:
  PermutationSpec(std::vector<std::vector<long long>> cycles, std::optional<IncreasingBlocks> blocks,
                  DefaultRule rule);

  static PermutationSpec identity() { return PermutationSpec({}, std::nullopt, {}); }
  static PermutationSpec shift(long long t = 1) { return PermutationSpec({}, std::nullopt, {DefaultKind::ShiftBy, t}); }

  const std::vector<std::vector<long long>>& cycles() const { return cycles_; }
  const std::optional<IncreasingBlocks>& blocks() const { return blocks_; }
  const DefaultRule& default_rule() const { return rule_; }

  long long apply(long long s) const;
  long long inverse(long long s) const;

  // Index of the finite cycle containing s.
  std::optional<std::size_t> cycle_index(long long s) const;

  // Block index i >= 1 containing s, or 0 when s is not reserved.
  long long block_of(long long s) const;
  std::pair<long long, long long> block_range(long long i) const;

  std::string describe() const;

 private:
  long long complement_step(long long s, int dir) const;

  std::vector<std::vector<long long>> cycles_;
  std::optional<IncreasingBlocks> blocks_;
  DefaultRule rule_;
  std::map<long long, std::pair<std::size_t, std::size_t>> cycle_pos_;  // point -> (cycle, position)
};

// lambda(s) on the unit circle.
class PhaseSpec {
 public:
  enum class Kind { Constant, Periodic, PerCycle };

  static PhaseSpec constant(cplx value = 1.0);
  static PhaseSpec periodic(std::vector<cplx> values);
  // values[i] applies to the points of finite cycle i; other points get fallback.
  static PhaseSpec per_cycle(std::vector<cplx> values, cplx fallback = 1.0);

  cplx at(long long s, const PermutationSpec& spec) const;
  bool is_real() const;
  Kind kind() const { return kind_; }

 private:
  PhaseSpec(Kind kind, std::vector<cplx> values, cplx fallback);

  Kind kind_;
  std::vector<cplx> values_;
  cplx fallback_;
};

// {"cycles": [[...]], "blocks": "increasing" | {"origin": o} | null,
//  "default": {"kind": "identity" | "shift", "t": 1},
//  "phases": {"kind": "constant", "value": v} | {"kind": "periodic", "values": [...]}
//            | {"kind": "per-cycle", "values": [...], "default": v}}
// Phase values are numbers or [re, im] pairs.
PermutationSpec spec_from_json(const nlohmann::json& j);
PhaseSpec phases_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const PermutationSpec& spec);

// The permutation restricted to [lo, hi): points whose image leaves the window
// start open chains, which are closed into cycles (last point sent to the
// chain's first point). Entry s - lo is the image of s.
struct Truncation {
  long long lo = 0;
  long long hi = 0;
  std::vector<long long> image;
  std::vector<char> agrees;  // image equals sigma(s)
};

inline constexpr long long kMaxWindow = 1000000;

Truncation truncate(const PermutationSpec& spec, long long lo, long long hi);

}  // namespace calab::isometry
