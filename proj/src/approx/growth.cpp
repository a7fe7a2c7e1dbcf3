#include "calab/approx/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "calab/error.hpp"
#include "calab/parallel.hpp"
#include "calab/spin/packing.hpp"

namespace calab::approx {

const char* to_string(GrowthMode mode) { return mode == GrowthMode::Upper ? "upper" : "lower"; }
const char* to_string(LowerRule rule) { return rule == LowerRule::L1Basis ? "l1-basis" : "comb-packing"; }

normed::VectorFamily orbit_union(const IsometrySystem& system, const normed::VectorFamily& omega, std::size_t n) {
  std::vector<Vec> out;
  std::vector<Vec> cur = omega.vectors();
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& v : cur)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    if (k + 1 < n)
      for (auto& v : cur) v = system.apply(v);
  }
  return normed::VectorFamily(omega.space(), std::move(out));
}

double packing_log_rank(double q_size, double delta, Field field) {
  double d;
  if (field == Field::Complex)
    d = std::ceil(delta * delta * q_size / (2.0 * std::numbers::pi) - 1e-12);
  else
    d = std::ceil(q_size / 2.0 - 1e-12);
  return std::log(std::max(1.0, d));
}

double packing_log_rank(std::size_t q_size, double delta, Field field) {
  return packing_log_rank(static_cast<double>(q_size), delta, field);
}

void check_packing_hypotheses(const IsometrySystem& system, const normed::VectorFamily& omega, double delta,
                              std::size_t n, std::size_t max_words) {
  const auto& space = omega.space();
  const auto& xs = omega.vectors();
  if (!(delta > 0.0 && delta < 1.0 / 6.0)) throw HypothesisNotMet("packing rule needs 0 < delta < 1/6");
  for (const auto& x : xs)
    if (std::fabs(space.norm(x) - 1.0) > 1e-12) throw HypothesisNotMet("probe vectors must be unit vectors");
  double widest = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) throw HypothesisNotMet("probe vectors must be distinct");
      Vec s = xs[i];
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += xs[j][k];
      widest = std::max(widest, space.norm(s));
    }
  }
  if (!(delta < 2.0 - widest))
    throw HypothesisNotMet("delta must be below 2 - max ||x + y|| = " + std::to_string(2.0 - widest));

  // powers[k][j] = alpha^k(x_j)
  const std::size_t m = xs.size();
  std::vector<std::vector<Vec>> powers(n, xs);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t j = 0; j < m; ++j) powers[k][j] = system.apply(powers[k - 1][j]);
  const double total = std::pow(static_cast<double>(m), static_cast<double>(n));
  const double checks = std::min(total, static_cast<double>(std::max<std::size_t>(1, max_words)));
  const auto count = static_cast<std::size_t>(checks);
  Vec sum(space.dimension());
  for (std::size_t c = 0; c < count; ++c) {
    // Evenly strided word indices when not every word is checked.
    double idx = std::floor(static_cast<double>(c) * total / checks);
    std::fill(sum.begin(), sum.end(), cplx{});
    for (std::size_t k = n; k-- > 0;) {
      const auto sym = static_cast<std::size_t>(std::fmod(idx, static_cast<double>(m)));
      idx = std::floor(idx / static_cast<double>(m));
      const auto& v = powers[k][sym];
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += v[d];
    }
    const double nn = static_cast<double>(n);
    if (std::fabs(space.norm(sum) - nn) > 1e-9 * nn)
      throw HypothesisNotMet("orbit words do not have norm n at n = " + std::to_string(n));
  }
}

GrowthSequence hc_growth(const IsometrySystem& system, const normed::VectorFamily& omega, double delta,
                         std::size_t n_max, GrowthMode mode, const GrowthOptions& options) {
  if (n_max == 0 || n_max > kMaxHorizon)
    throw InvalidArgument("horizon must be in [1, " + std::to_string(kMaxHorizon) + "]");
  if (omega.empty()) throw InvalidArgument("empty probe set");
  if (!(omega.space() == system.space())) throw InvalidArgument("probe set and system live in different spaces");
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");

  GrowthSequence seq;
  seq.mode = mode;
  seq.rule = options.rule;
  seq.delta = delta;
  seq.a = options.a;
  seq.system = system.name();
  seq.rows.resize(n_max);

  parallel_for(n_max, [&](std::size_t i) {
    const std::size_t n = i + 1;
    GrowthRow row;
    row.n = n;
    if (mode == GrowthMode::Upper) {
      const auto u = orbit_union(system, omega, n);
      row.family_size = u.size();
      row.bound = std::log(rc_upper(system.space(), u, delta, options.net).value);
    } else if (options.rule == LowerRule::L1Basis) {
      const auto u = orbit_union(system, omega, n);
      row.family_size = u.size();
      row.bound = rc_lower(u, delta, options.a, options.mesh, options.lower).value;
    } else {
      check_packing_hypotheses(system, omega, delta, n, options.identity_checks);
      spin::PackingOptions po;
      po.counting_fallback = true;
      const auto packing = spin::comb_packing(omega.size(), n, delta, po);
      row.family_size = omega.size() * n;
      row.packing_size = static_cast<std::size_t>(packing.size);
      row.packing_exact = packing.greedy;
      row.bound = packing_log_rank(packing.size, delta, omega.space().field());
    }
    row.normalized = row.bound / static_cast<double>(n);
    seq.rows[i] = row;
  });

  if (mode == GrowthMode::Lower && options.rule == LowerRule::L1Basis)
    seq.notes.push_back("bounds are in units of the constant a");
  if (mode == GrowthMode::Lower && options.rule == LowerRule::CombPacking) {
    seq.notes.push_back("approximation tolerance is delta^2; delta is the packing parameter");
    if (std::any_of(seq.rows.begin(), seq.rows.end(), [](const GrowthRow& r) { return !r.packing_exact; }))
      seq.notes.push_back("rows above the word guard use the counting bound ceil(m^n / ball volume)");
  }
  return seq;
}

}  // namespace calab::approx
