#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace calab::symbolic {

using Word = std::vector<std::uint8_t>;
using TransitionMatrix = std::vector<std::vector<int>>;

enum class MetricKind { Coordinate0, WeightedSum };

// Coordinate0: d(x, y) = [x_0 != y_0].
// WeightedSum: d(x, y) = sum_{|k| <= radius} 2^-|k| [x_k != y_k].
struct Metric {
  MetricKind kind = MetricKind::Coordinate0;
  std::size_t radius = 3;

  // Coordinates that d_n reads: [-radius, n - 1 + radius] for WeightedSum.
  std::size_t window(std::size_t n) const { return kind == MetricKind::Coordinate0 ? n : n + 2 * radius; }
};

// A subshift of finite type, given by a 0/1 transition matrix on symbols or by
// forbidden words, stored as a vertex shift on blocks of length block_length
// (1 for a transition matrix, longest forbidden word - 1 otherwise). States
// that cannot be continued in both directions are trimmed, so every path is a
// window of some bi-infinite point.
class SymbolicSystem {
 public:
  static SymbolicSystem from_transition(const TransitionMatrix& a, Metric metric = {});
  static SymbolicSystem from_forbidden(std::size_t alphabet, const std::vector<Word>& forbidden, Metric metric = {});
  static SymbolicSystem full_shift(std::size_t alphabet, Metric metric = {});

  std::size_t alphabet() const { return alphabet_; }
  const Metric& metric() const { return metric_; }
  void set_metric(Metric m) { metric_ = m; }
  std::size_t block_length() const { return block_; }
  std::size_t state_count() const { return states_.size(); }
  bool empty() const { return states_.empty(); }

  // Adjacency among the trimmed block states, for the entropy oracle.
  TransitionMatrix block_transition() const;

  // Admissible words of length len in lexicographic order. Throws
  // GuardExceeded above max_words words.
  std::vector<Word> words(std::size_t len, std::size_t max_words = 1000000) const;
  // Number of admissible words of length len (dynamic programming).
  double word_count(std::size_t len) const;

  // Bowen distance d_n of two windows of length metric().window(n).
  double distance(const Word& a, const Word& b, std::size_t n) const;

  std::string describe() const;

 private:
  SymbolicSystem(std::size_t alphabet, std::size_t block, std::vector<Word> states,
                 std::vector<std::vector<std::size_t>> next, Metric metric, std::string origin);

  std::size_t alphabet_ = 0;
  std::size_t block_ = 1;
  std::vector<Word> states_;  // sorted lexicographically
  std::vector<std::vector<std::size_t>> next_;  // successors, ascending by appended symbol
  Metric metric_;
  std::string origin_;
};

// {"alphabet": m, "transition": [[...]]} or {"alphabet": m, "forbidden":
// ["11", ...]}, optionally "metric": {"kind": "coordinate0"|"weighted-sum",
// "radius": r}. Forbidden words are digit strings or integer arrays.
SymbolicSystem system_from_json(const nlohmann::json& j);
SymbolicSystem load_system(const std::filesystem::path& path);

}  // namespace calab::symbolic
