#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "calab/isometry/permutation.hpp"

namespace calab::isometry {

enum class OrbitKind { Fixed, Cycle, Block, Infinite };

const char* to_string(OrbitKind k);

struct OrbitRecord {
  long long first = 0;     // smallest window point on the orbit
  std::size_t size = 0;    // exact orbit length; 0 for an infinite orbit
  OrbitKind kind = OrbitKind::Fixed;
  std::size_t in_window = 0;
};

struct OrbitCensus {
  std::vector<OrbitRecord> orbits;  // orbits meeting the window, by first point
  std::size_t max_finite = 0;       // largest finite orbit meeting the window
  // From the presentation, not the window:
  bool bounded = true;           // every orbit finite with a common bound
  bool unbounded_finite = false;  // finite orbits of every length (block family)
  bool has_infinite = false;      // some orbit is infinite (ShiftBy default)
  std::size_t infinite_orbits = 0;  // |t| for ShiftBy(t)
  std::size_t global_bound = 1;     // the common bound when bounded
};

// Throws InvalidArgument when the window is empty or longer than kMaxWindow.
OrbitCensus orbit_census(const PermutationSpec& spec, long long lo, long long hi);

enum class Verdict { Zero, Infinite };

const char* to_string(Verdict v);

// Evidence cited for a verdict: the orbits are full finite orbits or a segment
// of an infinite one, each re-checkable against the presentation.
struct Evidence {
  enum class Kind { BoundedOrbits, UnboundedFiniteOrbits, InfiniteOrbit, NoInfiniteOrbit };
  Kind kind = Kind::BoundedOrbits;
  std::size_t max_orbit = 1;
  std::vector<std::vector<long long>> finite_orbits;
  std::vector<long long> segment;
};

const char* to_string(Evidence::Kind k);

struct Classification {
  Verdict verdict = Verdict::Zero;
  Evidence evidence;
  std::string reason;
};

// Zero iff orbit lengths are bounded (no block family, identity default).
Classification classify_linfty(const PermutationSpec& spec);
// Infinite iff some orbit is infinite (ShiftBy default).
Classification classify_ell1(const PermutationSpec& spec);

// Every cited orbit is an orbit of spec and the evidence supports the verdict.
bool verify_evidence(const PermutationSpec& spec, const Classification& c);

nlohmann::json to_json(const Classification& c);

}  // namespace calab::isometry
