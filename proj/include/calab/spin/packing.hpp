#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace calab::spin {

inline constexpr double kMaxWords = 1e6;

using Word = std::vector<std::uint8_t>;

// Greedy code in {0..m-1}^n with pairwise Hamming distance >= hamming_floor,
// hamming_floor = ceil(3 n delta).
struct PackingResult {
  std::size_t m = 0;
  std::size_t n = 0;
  double delta = 0.0;
  unsigned hamming_floor = 1;
  std::vector<Word> words;  // empty when the counting bound stands in
  double size = 0.0;        // |Q|
  bool greedy = true;       // false: size is ceil(bound_rhs), no words built
  double ball_volume = 0.0;  // words at distance < hamming_floor from a fixed word
  double bound_rhs = 0.0;    // m^n / ball_volume
  double stirling_rhs = 0.0;  // Stirling-form lower bound with M = 1
  bool verified = false;      // pairwise floor re-checked on the built words
};

struct PackingOptions {
  // Above m^n = kMaxWords, report ceil(bound_rhs) instead of throwing.
  bool counting_fallback = false;
};

unsigned hamming_floor(std::size_t n, double delta);
double hamming_ball_volume(std::size_t m, std::size_t n, unsigned radius_exclusive);
double stirling_rhs(std::size_t m, std::size_t n, double delta);

// Lexicographic greedy maximal packing, re-verified after construction.
// Throws InvalidArgument unless 0 < delta < 1/6 and 1 <= m <= 255, and
// GuardExceeded when m^n > kMaxWords without counting_fallback.
PackingResult comb_packing(std::size_t m, std::size_t n, double delta, const PackingOptions& options = {});

// True when every pair of words is at Hamming distance >= floor.
bool verify_packing(const std::vector<Word>& words, std::size_t m, unsigned floor);

}  // namespace calab::spin
