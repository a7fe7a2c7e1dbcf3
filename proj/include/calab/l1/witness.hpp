#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "calab/l1/basis_constants.hpp"
#include "json.hpp"

namespace calab::l1 {

struct Density {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Density&, const Density&) = default;
};

Density make_density(std::int64_t num, std::int64_t den);
bool operator<(const Density& a, const Density& b);

struct WitnessOptions {
  double mesh = 0.05;
  std::size_t budget = 4096;  // certification calls
  LowerOptions lower;
};

struct WitnessReport {
  bool found = false;
  std::vector<long long> indices;  // labels of I, ascending
  Density density;
  BasisConstants constants;  // of the reported sub-family
  std::size_t certifications = 0;
  bool budget_exhausted = false;
  bool exhaustive = false;
};

// Densest subset I of the orbit window whose equivalence constant is
// certified <= K. Families of at most kExhaustiveLimit vectors are searched
// subset by subset from the largest size down (a certified set stays
// certified under removal, so the first hit is the densest); larger ones are
// grown greedily from each singleton. When nothing of density >= min_density
// certifies, found is false and the report carries the best candidate seen.
inline constexpr std::size_t kExhaustiveLimit = 16;

WitnessReport find_l1_witness(const normed::VectorFamily& orbit, double K, Density min_density,
                              const WitnessOptions& options = {});

nlohmann::json to_json(const Interval& interval);
nlohmann::json to_json(const WitnessReport& report, double K);

}  // namespace calab::l1
