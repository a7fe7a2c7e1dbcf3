#include "calab/symbolic/counts.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "calab/error.hpp"

namespace calab::symbolic {

namespace {

// Both metrics weight every coordinate of the window, so distinct windows are
// at positive distance and the d_n = 0 classes are the windows themselves.
struct Windows {
  std::vector<Word> words;
  std::size_t n = 0;
};

Windows collect(const SymbolicSystem& system, std::size_t n, CountMode mode) {
  if (n == 0) throw InvalidArgument("n must be positive");
  if (system.empty()) throw EmptySystem("subshift has no bi-infinite points");
  const std::size_t len = system.metric().window(n);
  if (mode == CountMode::Exact) {
    const double space = std::pow(static_cast<double>(system.alphabet()), static_cast<double>(len));
    if (space > kExactWordGuard) throw GuardExceeded("exact counts need m^window <= 10^6");
  }
  return {system.words(len), n};
}

double min_positive_distance(const Metric& m) {
  return m.kind == MetricKind::Coordinate0 ? 1.0 : std::ldexp(1.0, -static_cast<int>(m.radius));
}

double max_distance(const Metric& m) {
  return m.kind == MetricKind::Coordinate0 ? 1.0 : 3.0 - std::ldexp(1.0, 1 - static_cast<int>(m.radius));
}

using Graph = std::vector<std::vector<std::uint32_t>>;

// Edges join windows closer than eps.
Graph closeness_graph(const SymbolicSystem& system, const Windows& w, double eps) {
  Graph g(w.words.size());
  for (std::size_t i = 0; i < w.words.size(); ++i)
    for (std::size_t j = i + 1; j < w.words.size(); ++j)
      if (system.distance(w.words[i], w.words[j], w.n) < eps) {
        g[i].push_back(static_cast<std::uint32_t>(j));
        g[j].push_back(static_cast<std::uint32_t>(i));
      }
  return g;
}

std::size_t greedy_separated(const SymbolicSystem& system, const Windows& w, double eps) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < w.words.size(); ++i) {
    bool ok = true;
    for (std::size_t c : chosen)
      if (system.distance(w.words[i], w.words[c], w.n) < eps) {
        ok = false;
        break;
      }
    if (ok) chosen.push_back(i);
  }
  return chosen.size();
}

class MaxIndependentSet {
 public:
  MaxIndependentSet(const Graph& g, std::size_t budget) : g_(g), budget_(budget), alive_(g.size(), 1) {}

  CountResult run(std::size_t initial) {
    best_ = initial;
    std::vector<std::uint32_t> cand(g_.size());
    for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = static_cast<std::uint32_t>(i);
    search(cand, 0);
    return {best_, !aborted_, g_.size(), nodes_};
  }

 private:
  std::size_t degree(std::uint32_t v) const {
    std::size_t d = 0;
    for (auto u : g_[v]) d += alive_[u];
    return d;
  }

  void search(std::vector<std::uint32_t> cand, std::size_t cur) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    std::vector<std::uint32_t> removed;
    auto kill = [&](std::uint32_t v) {
      if (alive_[v]) {
        alive_[v] = 0;
        removed.push_back(v);
      }
    };
    // Vertices of degree 0 or 1 belong to some maximum independent set.
    for (bool changed = true; changed;) {
      changed = false;
      for (auto v : cand) {
        if (!alive_[v]) continue;
        const std::size_t d = degree(v);
        if (d <= 1) {
          ++cur;
          kill(v);
          for (auto u : g_[v]) kill(u);
          changed = true;
        }
      }
    }
    std::vector<std::uint32_t> rest;
    std::uint32_t pivot = 0;
    std::size_t pivot_deg = 0;
    for (auto v : cand) {
      if (!alive_[v]) continue;
      rest.push_back(v);
      const std::size_t d = degree(v);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    if (rest.empty()) {
      best_ = std::max(best_, cur);
    } else if (cur + rest.size() > best_) {
      // Take the pivot.
      std::vector<std::uint32_t> taken;
      alive_[pivot] = 0;
      for (auto u : g_[pivot])
        if (alive_[u]) {
          alive_[u] = 0;
          taken.push_back(u);
        }
      search(rest, cur + 1);
      for (auto u : taken) alive_[u] = 1;
      // Leave the pivot out.
      search(rest, cur);
      alive_[pivot] = 1;
    }
    for (auto v : removed) alive_[v] = 1;
  }

  const Graph& g_;
  std::size_t budget_;
  std::vector<char> alive_;
  std::size_t best_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

class MinDominatingSet {
 public:
  MinDominatingSet(const Graph& g, std::size_t budget) : g_(g), budget_(budget), covered_(g.size(), 0) {
    for (const auto& nb : g_) max_closed_ = std::max(max_closed_, nb.size() + 1);
  }

  CountResult run(std::size_t initial) {
    best_ = initial;
    uncovered_ = g_.size();
    search(0);
    return {best_, !aborted_, g_.size(), nodes_};
  }

 private:
  void add(std::uint32_t v, int delta) {
    auto bump = [&](std::uint32_t u) {
      if (delta > 0 && covered_[u]++ == 0) --uncovered_;
      if (delta < 0 && --covered_[u] == 0) ++uncovered_;
    };
    bump(v);
    for (auto u : g_[v]) bump(u);
  }

  std::size_t gain(std::uint32_t v) const {
    std::size_t gsum = covered_[v] == 0;
    for (auto u : g_[v]) gsum += covered_[u] == 0;
    return gsum;
  }

  void search(std::size_t cur) {
    if (aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    if (uncovered_ == 0) {
      best_ = std::min(best_, cur);
      return;
    }
    const std::size_t need = (uncovered_ + max_closed_ - 1) / max_closed_;
    if (cur + need >= best_) return;
    // Branch on the dominators of the uncovered vertex with the fewest of them.
    std::uint32_t pick = 0;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (covered_[v]) continue;
      if (g_[v].size() + 1 < fewest) {
        fewest = g_[v].size() + 1;
        pick = static_cast<std::uint32_t>(v);
      }
    }
    std::vector<std::uint32_t> options{pick};
    options.insert(options.end(), g_[pick].begin(), g_[pick].end());
    std::stable_sort(options.begin(), options.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return gain(a) > gain(b); });
    for (auto c : options) {
      add(c, +1);
      search(cur + 1);
      add(c, -1);
      if (aborted_) return;
    }
  }

  const Graph& g_;
  std::size_t budget_;
  std::vector<std::uint32_t> covered_;
  std::size_t uncovered_ = 0;
  std::size_t max_closed_ = 1;
  std::size_t best_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
};

enum class Trivial { None, NoEdges, Complete };

Trivial classify(const Metric& m, double eps) {
  if (eps <= min_positive_distance(m)) return Trivial::NoEdges;
  if (eps > max_distance(m)) return Trivial::Complete;
  return Trivial::None;
}

CountResult count(const SymbolicSystem& system, std::size_t n, double eps, CountMode mode,
                  const CountOptions& options, bool separated) {
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  const Windows w = collect(system, n, mode);
  const std::size_t total = w.words.size();
  switch (classify(system.metric(), eps)) {
    case Trivial::NoEdges:
      return {total, true, total, 0};
    case Trivial::Complete:
      return {std::min<std::size_t>(1, total), true, total, 0};
    case Trivial::None:
      break;
  }
  const std::size_t greedy = greedy_separated(system, w, eps);
  if (mode == CountMode::Greedy) return {greedy, false, total, 0};
  const Graph g = closeness_graph(system, w, eps);
  if (separated) return MaxIndependentSet(g, options.node_budget).run(greedy);
  return MinDominatingSet(g, options.node_budget).run(greedy);
}

}  // namespace

CountResult sep_count(const SymbolicSystem& system, std::size_t n, double eps, CountMode mode,
                      const CountOptions& options) {
  return count(system, n, eps, mode, options, true);
}

CountResult spn_count(const SymbolicSystem& system, std::size_t n, double eps, CountMode mode,
                      const CountOptions& options) {
  return count(system, n, eps, mode, options, false);
}

}  // namespace calab::symbolic
