#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "calab/approx/rc_bounds.hpp"
#include "calab/approx/systems.hpp"

namespace calab::approx {

inline constexpr std::size_t kMaxHorizon = 24;

enum class GrowthMode { Upper, Lower };

// Lower-mode rule. L1Basis: rc_lower on the orbit union. CombPacking: the
// Hamming packing argument for a probe set of unit vectors whose words
// sum_k alpha^k(x_k) all have norm n; d >= ceil(delta^2 |Q_n| / (2 pi)) over
// the complex field and d >= ceil(|Q_n| / 2) over the reals (a real value
// can only sit at argument 0 or pi).
enum class LowerRule { L1Basis, CombPacking };

const char* to_string(GrowthMode mode);
const char* to_string(LowerRule rule);

struct GrowthRow {
  std::size_t n = 0;
  double bound = 0.0;       // log of the rank bound
  double normalized = 0.0;  // bound / n
  std::size_t family_size = 0;
  std::size_t packing_size = 0;  // CombPacking only
  bool packing_exact = true;     // false when the counting bound replaced the greedy packing
};

struct GrowthSequence {
  GrowthMode mode = GrowthMode::Lower;
  LowerRule rule = LowerRule::L1Basis;
  double delta = 0.0;
  double a = 1.0;
  std::string system;
  std::vector<GrowthRow> rows;
  std::vector<std::string> notes;
};

struct GrowthOptions {
  double a = 1.0;
  double mesh = 1e-3;
  LowerRule rule = LowerRule::L1Basis;
  normed::NetOptions net;
  l1::LowerOptions lower;
  // Words checked for the norm identity of the packing rule, per n.
  std::size_t identity_checks = 4096;
};

// Rows n = 1..n_max for the unions omega, alpha omega, ..., alpha^(n-1) omega
// (duplicates removed). Throws InvalidArgument when n_max is 0 or exceeds
// kMaxHorizon.
GrowthSequence hc_growth(const IsometrySystem& system, const normed::VectorFamily& omega, double delta,
                         std::size_t n_max, GrowthMode mode, const GrowthOptions& options = {});

// The union omega, alpha omega, ..., alpha^(n-1) omega without repeats, in
// orbit order.
normed::VectorFamily orbit_union(const IsometrySystem& system, const normed::VectorFamily& omega, std::size_t n);

// Packing-rule hypotheses on omega: unit vectors, max ||x + y|| < 2 - delta
// for x != y, 0 < delta < 1/6, and ||sum_k alpha^k(x_k)|| = n on the checked
// words. Throws HypothesisNotMet naming the failed condition.
void check_packing_hypotheses(const IsometrySystem& system, const normed::VectorFamily& omega, double delta,
                              std::size_t n, std::size_t max_words);

// log d for the packing rule given |Q_n|.
double packing_log_rank(std::size_t q_size, double delta, Field field);
double packing_log_rank(double q_size, double delta, Field field);

}  // namespace calab::approx
