#include "calab/spin/packing.hpp"

#include <algorithm>
#include <cmath>

#include "calab/error.hpp"
#include "calab/kernels/kernels.hpp"

namespace calab::spin {

namespace {

std::size_t word_index(const Word& w, std::size_t m) {
  std::size_t idx = 0;
  for (auto s : w) idx = idx * m + s;
  return idx;
}

// Visits every word at Hamming distance in [1, radius] from w, in place.
template <class Visit>
void visit_ball(Word& w, std::size_t m, unsigned radius, std::size_t start, Visit&& visit) {
  if (radius == 0) return;
  for (std::size_t i = start; i < w.size(); ++i) {
    const auto orig = w[i];
    for (std::size_t s = 0; s < m; ++s) {
      if (s == orig) continue;
      w[i] = static_cast<std::uint8_t>(s);
      visit(w);
      visit_ball(w, m, radius - 1, i + 1, visit);
    }
    w[i] = orig;
  }
}

}  // namespace

unsigned hamming_floor(std::size_t n, double delta) {
  const double t = std::ceil(3.0 * static_cast<double>(n) * delta - 1e-9);
  return static_cast<unsigned>(std::max(1.0, t));
}

double hamming_ball_volume(std::size_t m, std::size_t n, unsigned radius_exclusive) {
  double vol = 0.0, binom = 1.0, pw = 1.0;
  for (std::size_t k = 0; k < radius_exclusive && k <= n; ++k) {
    vol += pw * binom;
    binom = binom * static_cast<double>(n - k) / static_cast<double>(k + 1);
    pw *= static_cast<double>(m - 1);
  }
  return vol;
}

double stirling_rhs(std::size_t m, std::size_t n, double delta) {
  const double nd = static_cast<double>(n);
  const double r = 1.0 - 3.0 * delta;
  return std::pow(static_cast<double>(m), nd * r) * std::sqrt(nd * delta) * std::pow(r, nd) *
         std::pow(3.0 * delta / r, 3.0 * nd * delta);
}

bool verify_packing(const std::vector<Word>& words, std::size_t m, unsigned floor) {
  if (words.size() < 2 || floor <= 1) {
    // Distinctness is all that floor 1 asks for.
    std::vector<std::size_t> idx;
    for (const auto& w : words) idx.push_back(word_index(w, m));
    std::sort(idx.begin(), idx.end());
    return std::adjacent_find(idx.begin(), idx.end()) == idx.end();
  }
  const std::size_t n = words.front().size();
  if (words.size() <= 20000 && n <= kernels::kWordStride) {
    std::vector<std::uint8_t> packed(words.size() * kernels::kWordStride, 0);
    for (std::size_t i = 0; i < words.size(); ++i)
      std::copy(words[i].begin(), words[i].end(), packed.begin() + i * kernels::kWordStride);
    const auto& k = kernels::active();
    for (std::size_t i = 1; i < words.size(); ++i) {
      const std::uint8_t* probe = packed.data() + i * kernels::kWordStride;
      if (k.first_closer_than(packed.data(), i, probe, floor) != i) return false;
    }
    return true;
  }
  double total = 1.0;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(m);
  if (total > kMaxWords) throw GuardExceeded("packing re-verification exceeds the word guard");
  std::vector<std::uint8_t> member(static_cast<std::size_t>(total), 0);
  for (const auto& w : words) {
    auto& slot = member[word_index(w, m)];
    if (slot) return false;
    slot = 1;
  }
  bool ok = true;
  for (const auto& w0 : words) {
    Word w = w0;
    visit_ball(w, m, floor - 1, 0, [&](const Word& v) {
      if (member[word_index(v, m)]) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

PackingResult comb_packing(std::size_t m, std::size_t n, double delta, const PackingOptions& options) {
  if (!(delta > 0.0 && delta < 1.0 / 6.0)) throw InvalidArgument("packing needs 0 < delta < 1/6");
  if (m < 1 || m > 255) throw InvalidArgument("alphabet size must be in [1, 255]");
  if (n < 1) throw InvalidArgument("horizon must be positive");
  PackingResult r;
  r.m = m;
  r.n = n;
  r.delta = delta;
  r.hamming_floor = hamming_floor(n, delta);
  r.ball_volume = hamming_ball_volume(m, n, r.hamming_floor);
  const double total = std::pow(static_cast<double>(m), static_cast<double>(n));
  r.bound_rhs = total / r.ball_volume;
  r.stirling_rhs = stirling_rhs(m, n, delta);

  if (total > kMaxWords) {
    if (!options.counting_fallback) throw GuardExceeded("m^n exceeds the packing word guard");
    r.greedy = false;
    r.size = std::ceil(r.bound_rhs - 1e-9);
    return r;
  }

  const auto count = static_cast<std::size_t>(total);
  std::vector<std::uint8_t> blocked(count, 0);
  Word w(n, 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    // w is the base-m expansion of idx, most significant symbol first.
    if (!blocked[idx]) {
      r.words.push_back(w);
      blocked[idx] = 1;
      Word v = w;
      visit_ball(v, m, r.hamming_floor - 1, 0, [&](const Word& u) { blocked[word_index(u, m)] = 1; });
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++w[i] < m) break;
      w[i] = 0;
    }
  }
  r.size = static_cast<double>(r.words.size());
  r.verified = verify_packing(r.words, m, r.hamming_floor);
  return r;
}

}  // namespace calab::spin
