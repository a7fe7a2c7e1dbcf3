#include "calab/spin/shift_experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "calab/error.hpp"
#include "calab/spin/packing.hpp"
#include "calab/spin/pauli.hpp"

namespace calab::spin {

namespace {

constexpr std::size_t kMatrixCheckSites = 6;
constexpr std::size_t kMatrixCheckWords = 8;

}  // namespace

approx::GrowthSequence shift_growth_experiment(std::size_t m, std::size_t n_max, double delta) {
  if (m < 1 || m > kMaxShiftPhases) throw GuardExceeded("phase count must be in [1, 8]");
  if (n_max < 1 || n_max > kMaxShiftHorizon) throw GuardExceeded("horizon must be in [1, 12]");
  if (!(delta > 0.0 && delta < 1.0 / 6.0)) throw HypothesisNotMet("packing rule needs 0 < delta < 1/6");

  std::vector<std::pair<double, double>> omega;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m);
    omega.emplace_back(std::cos(t), std::sin(t));
  }
  double widest = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      widest = std::max(widest, std::hypot(omega[i].first + omega[j].first, omega[i].second + omega[j].second));
  if (!(delta < 2.0 - widest))
    throw HypothesisNotMet("delta must be below 2 - max ||x + y|| = " + std::to_string(2.0 - widest));

  approx::GrowthSequence seq;
  seq.mode = approx::GrowthMode::Lower;
  seq.rule = approx::LowerRule::CombPacking;
  seq.delta = delta;
  seq.system = "tensor-shift(m=" + std::to_string(m) + ")";
  for (std::size_t n = 1; n <= n_max; ++n) {
    // The shifted words sum_k alpha^k(x_k) must have norm n; check a few
    // against the dense operator while it is small.
    if (n <= kMatrixCheckSites) {
      const double total = std::pow(static_cast<double>(m), static_cast<double>(n));
      const std::size_t words = static_cast<std::size_t>(std::min(total, static_cast<double>(kMatrixCheckWords)));
      for (std::size_t w = 0; w < words; ++w) {
        double idx = std::floor(static_cast<double>(w) * total / static_cast<double>(words));
        PauliCoefficients coeffs(n);
        for (std::size_t k = n; k-- > 0;) {
          coeffs[k] = omega[static_cast<std::size_t>(std::fmod(idx, static_cast<double>(m)))];
          idx = std::floor(idx / static_cast<double>(m));
        }
        const auto r = pauli_span_norm(coeffs, true);
        if (std::fabs(*r.matrix_norm - static_cast<double>(n)) > 1e-9 * static_cast<double>(n))
          throw HypothesisNotMet("shifted word does not have norm n");
      }
    }
    PackingOptions po;
    po.counting_fallback = true;
    const auto packing = comb_packing(m, n, delta, po);
    approx::GrowthRow row;
    row.n = n;
    row.family_size = m * n;
    row.packing_size = static_cast<std::size_t>(packing.size);
    row.packing_exact = packing.greedy;
    row.bound = approx::packing_log_rank(packing.size, delta, Field::Complex);
    row.normalized = row.bound / static_cast<double>(n);
    seq.rows.push_back(row);
  }
  seq.notes.push_back("lower-bound slopes only; the limit value is not certified");
  seq.notes.push_back("approximation tolerance is delta^2; delta is the packing parameter");
  if (std::any_of(seq.rows.begin(), seq.rows.end(), [](const approx::GrowthRow& r) { return !r.packing_exact; }))
    seq.notes.push_back("rows above the word guard use the counting bound ceil(m^n / ball volume)");
  return seq;
}

}  // namespace calab::spin
