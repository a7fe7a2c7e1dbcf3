#include "calab/symbolic/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "calab/error.hpp"
#include "calab/parallel.hpp"

namespace calab::symbolic {

namespace {

std::vector<std::vector<std::size_t>> strongly_connected_components(const TransitionMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (!a[v][w]) continue;
      if (index[w] == SIZE_MAX) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v)
    if (index[v] == SIZE_MAX) visit(v);
  return comps;
}

// Perron root of an irreducible block B via M = B + I, which is primitive, so
// min_i (Mx)_i / x_i <= rho(M) <= max_i (Mx)_i / x_i brackets the root.
OracleResult perron_root(const TransitionMatrix& a, const std::vector<std::size_t>& comp, double tol) {
  const std::size_t k = comp.size();
  std::vector<double> x(k, 1.0), y(k);
  OracleResult r;
  for (std::size_t it = 1; it <= 1000000; ++it) {
    for (std::size_t i = 0; i < k; ++i) {
      double acc = x[i];
      for (std::size_t j = 0; j < k; ++j)
        if (a[comp[i]][comp[j]]) acc += x[j];
      y[i] = acc;
    }
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, mx = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double q = y[i] / x[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      mx = std::max(mx, y[i]);
    }
    for (std::size_t i = 0; i < k; ++i) x[i] = y[i] / mx;
    r.lower = lo - 1.0;
    r.upper = hi - 1.0;
    r.iterations = it;
    if (hi - lo <= tol * std::max(1.0, r.upper)) break;
  }
  r.radius = 0.5 * (r.lower + r.upper);
  r.log_radius = std::log(r.radius);
  return r;
}

}  // namespace

OracleResult sft_entropy_oracle(const TransitionMatrix& a, double tol) {
  const std::size_t n = a.size();
  if (n == 0) throw EmptySystem("empty transition matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidArgument("transition matrix must be square");
    for (int v : row)
      if (v != 0 && v != 1) throw InvalidArgument("transition entries must be 0 or 1");
  }
  bool any = false;
  OracleResult best;
  for (const auto& comp : strongly_connected_components(a)) {
    const bool cyclic = comp.size() > 1 || a[comp[0]][comp[0]];
    if (!cyclic) continue;
    const OracleResult r = perron_root(a, comp, tol);
    if (!any || r.radius > best.radius) best = r;
    any = true;
  }
  if (!any) throw EmptySystem("nilpotent transition matrix: no infinite admissible sequences");
  return best;
}

EntropyEstimate entropy_estimate(const SymbolicSystem& system, const std::vector<std::size_t>& n_schedule,
                                 const std::vector<double>& eps_schedule, CountMode mode,
                                 const CountOptions& options) {
  if (n_schedule.empty() || eps_schedule.empty()) throw InvalidArgument("schedules must be nonempty");
  for (std::size_t i = 1; i < eps_schedule.size(); ++i)
    if (!(eps_schedule[i] < eps_schedule[i - 1])) throw InvalidArgument("eps schedule must be strictly decreasing");
  for (std::size_t n : n_schedule)
    if (n == 0) throw InvalidArgument("n schedule entries must be positive");

  EntropyEstimate est;
  est.cells.resize(n_schedule.size() * eps_schedule.size());
  parallel_for(est.cells.size(), [&](std::size_t idx) {
    auto& cell = est.cells[idx];
    cell.n = n_schedule[idx / eps_schedule.size()];
    cell.eps = eps_schedule[idx % eps_schedule.size()];
    cell.sep = sep_count(system, cell.n, cell.eps, mode, options);
    cell.spn = spn_count(system, cell.n, cell.eps, mode, options);
    const double n = static_cast<double>(cell.n);
    cell.sep_rate = std::log(static_cast<double>(cell.sep.count)) / n;
    cell.spn_rate = std::log(static_cast<double>(cell.spn.count)) / n;
  });
  const std::size_t n_last = *std::max_element(n_schedule.begin(), n_schedule.end());
  for (const auto& c : est.cells) {
    est.spn_le_sep = est.spn_le_sep && c.spn.count <= c.sep.count;
    if (c.n == n_last && c.eps == eps_schedule.back()) est.extrapolated = c.sep_rate;
  }
  if (!system.empty()) est.oracle = sft_entropy_oracle(system.block_transition()).log_radius;
  return est;
}

}  // namespace calab::symbolic
