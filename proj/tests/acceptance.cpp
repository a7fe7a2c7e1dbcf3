// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "calab/approx/growth.hpp"
#include "calab/approx/rc_bounds.hpp"
#include "calab/approx/systems.hpp"
#include "calab/error.hpp"
#include "calab/isometry/classify.hpp"
#include "calab/l1/basis_constants.hpp"
#include "calab/normed/matrix.hpp"
#include "calab/spin/car.hpp"
#include "calab/spin/packing.hpp"
#include "calab/spin/pauli.hpp"
#include "calab/symbolic/counts.hpp"
#include "calab/symbolic/entropy.hpp"

using namespace calab;
using normed::FiniteNormedSpace;
using normed::VectorFamily;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Tolerances.
constexpr double kFull2RelTol = 0.02;
constexpr double kGoldenRelTol = 0.03;
constexpr double kEntropySeconds = 30.0;
constexpr double kPauliTol = 1e-9;
constexpr double kPauliSeconds = 60.0;
constexpr double kCarTol = 1e-9;
constexpr double kOracleMesh = 1e-3;
constexpr int kBruteGrid = 10000;  // simplex step 1e-4
constexpr double kL1AnchorWidth = 1e-6;
constexpr double kPauliAnchorTol = 1e-3;
constexpr double kShiftDelta = 0.05;
constexpr std::size_t kShiftHorizon = 12;
constexpr double kShiftSlopeFloor = 0.5;
constexpr double kPowerRatioFloor = 1.8;
constexpr double kNestSlack = 1e-12;

const std::string kLab = CALAB_LAB_EXE;
const fs::path kConfigs = CALAB_CONFIG_DIR;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

VectorFamily basis(FiniteNormedSpace s, std::size_t n) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(s.dimension(), 0.0);
    e[i] = 1.0;
    v.push_back(e);
  }
  return VectorFamily(s, v);
}

// 1. Subshift entropy.
Outcome criterion1() {
  Outcome o;
  using namespace symbolic;
  auto t0 = Clock::now();
  const auto full = entropy_estimate(SymbolicSystem::full_shift(2), {12}, {0.5});
  const double t_full = seconds_since(t0);
  const double err_full = std::fabs(full.extrapolated - std::log(2.0)) / std::log(2.0);
  o.require(err_full <= kFull2RelTol, "full 2-shift error " + fmt("%.4f", err_full));
  o.require(t_full < kEntropySeconds, "full 2-shift took " + fmt("%.1f s", t_full));

  t0 = Clock::now();
  const auto golden = entropy_estimate(SymbolicSystem::from_forbidden(2, {{1, 1}}), {14}, {0.5});
  const double t_gold = seconds_since(t0);
  const double truth = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  const double err_gold = std::fabs(golden.extrapolated - truth) / truth;
  o.require(err_gold <= kGoldenRelTol, "golden mean error " + fmt("%.4f", err_gold));
  o.require(t_gold < kEntropySeconds, "golden mean took " + fmt("%.1f s", t_gold));
  o.require(golden.oracle && std::fabs(*golden.oracle - truth) < 1e-9, "spectral-radius oracle off");
  o.note("full2 " + fmt("%.5f", full.extrapolated) + " (" + fmt("%.2f%%", 100 * err_full) + ", " +
         fmt("%.2f s", t_full) + "), golden " + fmt("%.5f", golden.extrapolated) + " (" +
         fmt("%.2f%%", 100 * err_gold) + ", " + fmt("%.2f s", t_gold) + ")");
  return o;
}

// 2. Pauli-span norm identity.
Outcome criterion2() {
  Outcome o;
  std::mt19937_64 rng(0xC2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  std::size_t draws = 0;
  const auto t0 = Clock::now();
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 100; ++t) {
      spin::PauliCoefficients c;
      double formula = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        c.emplace_back(u(rng), u(rng));
        formula += std::hypot(c.back().first, c.back().second);
      }
      const auto r = spin::pauli_span_norm(c, true);
      const double gap = std::max(std::fabs(*r.matrix_norm - formula), std::fabs(r.formula - formula));
      worst = std::max(worst, gap);
      ++draws;
    }
  const double secs = seconds_since(t0);
  o.require(worst <= kPauliTol, "worst gap " + fmt("%.3g", worst));
  o.require(secs < kPauliSeconds, "took " + fmt("%.1f s", secs));
  o.note(std::to_string(draws) + " draws, worst gap " + fmt("%.2e", worst) + ", " + fmt("%.2f s", secs));
  return o;
}

// 3. CAR relations and equivalence identities.
Outcome criterion3() {
  Outcome o;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto f = spin::car_generators(n);
    bool exact = spin::check_car_relations(f);
    for (std::size_t i = 0; i < n; ++i) {
      exact = exact && spin::is_identity(f.generators[i] * f.generators[i]);
      for (std::size_t j = i + 1; j < n; ++j)
        exact = exact && spin::sum_is_zero(f.generators[i] * f.generators[j], f.generators[j] * f.generators[i]);
    }
    o.require(exact, "anticommutation fails at n = " + std::to_string(n));
  }
  std::mt19937_64 rng(0xC3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst_l2 = 0.0, worst_l1 = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto f = spin::car_generators(n);
    for (int t = 0; t < 20; ++t) {
      std::vector<double> c(n);
      double sq = 0.0, ab = 0.0;
      for (auto& x : c) {
        x = u(rng);
        sq += x * x;
        ab += std::fabs(x);
      }
      worst_l2 = std::max(worst_l2, std::fabs(spin::car_l2_identity(f, c).value - std::sqrt(sq)));
      worst_l1 = std::max(worst_l1, std::fabs(spin::car_tensor_l1_identity(f, c).value - ab));
    }
  }
  o.require(worst_l2 <= kCarTol, "l2 identity gap " + fmt("%.3g", worst_l2));
  o.require(worst_l1 <= kCarTol, "tensor l1 identity gap " + fmt("%.3g", worst_l1));
  o.note("anticommutators exact for n <= 8; worst gaps l2 " + fmt("%.2e", worst_l2) + ", tensor l1 " +
         fmt("%.2e", worst_l1));
  return o;
}

// Minimum of the norm of sum c_i x_i over the simplex grid of step 1/N, one
// sign pattern at a time (first sign +1). Real vectors, at most three.
double brute_minimum(const std::vector<std::vector<double>>& x, double p, int N) {
  const std::size_t n = x.size(), d = x[0].size();
  auto nrm = [&](const double* y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      const double a = std::fabs(y[i]);
      if (p == 1.0)
        acc += a;
      else if (p == 2.0)
        acc += a * a;
      else
        acc = std::max(acc, a);
    }
    return acc;  // squared for p = 2
  };
  double best = INFINITY;
  double y[3];
  if (n == 1) {
    for (std::size_t i = 0; i < d; ++i) y[i] = x[0][i];
    best = nrm(y);
  } else {
    for (unsigned signs = 0; signs < (1u << (n - 1)); ++signs) {
      double s[3] = {1.0, signs & 1u ? -1.0 : 1.0, signs & 2u ? -1.0 : 1.0};
      for (int k0 = 0; k0 <= N; ++k0) {
        const int rest = N - k0;
        for (int k1 = n == 2 ? rest : 0; k1 <= rest; ++k1) {
          const double c0 = double(k0) / N, c1 = s[1] * double(k1) / N, c2 = n == 3 ? s[2] * double(rest - k1) / N : 0;
          for (std::size_t i = 0; i < d; ++i) y[i] = c0 * x[0][i] + c1 * x[1][i] + (n == 3 ? c2 * x[2][i] : 0.0);
          best = std::min(best, nrm(y));
        }
      }
    }
  }
  return p == 2.0 ? std::sqrt(best) : best;
}

// 4. l1-equivalence oracle agreement.
Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(0xC4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double ps[3] = {1.0, 2.0, normed::kInf};
  std::size_t agree = 0;
  double max_width = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 3, d = 1 + rng() % 3;
    const double p = ps[rng() % 3];
    std::vector<std::vector<double>> raw(n, std::vector<double>(d));
    std::vector<Vec> vecs;
    double L = 0.0;
    for (auto& r : raw) {
      for (auto& v : r) v = u(rng);
      vecs.emplace_back(r.begin(), r.end());
    }
    const auto space = FiniteNormedSpace::lp(p, d);
    for (const auto& v : vecs) L = std::max(L, space.norm(v));
    const auto iv = l1::lower_basis_constant(VectorFamily(space, vecs), kOracleMesh);
    const double brute = brute_minimum(raw, p, kBruteGrid);
    // The grid minimum overshoots the true minimum by at most L times the l1
    // rounding radius 2(n-1)/N of the simplex grid.
    const double slack = L * 2.0 * static_cast<double>(n - 1) / kBruteGrid;
    if (iv.contains(brute, slack))
      ++agree;
    else
      o.require(false, "family " + std::to_string(t) + ": [" + fmt("%.6f", iv.lo) + ", " + fmt("%.6f", iv.hi) +
                           "] misses " + fmt("%.6f", brute));
    max_width = std::max(max_width, iv.width());
  }

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto l1iv = l1::lower_basis_constant(basis(FiniteNormedSpace::lp(1, n), n), kOracleMesh);
    o.require(l1iv.contains(1.0) && l1iv.width() < kL1AnchorWidth, "l1 basis anchor n = " + std::to_string(n));
    const auto liv = l1::lower_basis_constant(basis(FiniteNormedSpace::lp(normed::kInf, n), n), kOracleMesh);
    o.require(liv.contains(1.0 / n), "l_inf basis anchor n = " + std::to_string(n));
  }
  const auto z = normed::pauli::Z(), x = normed::pauli::X();
  const VectorFamily zx(FiniteNormedSpace::matrix(2, Field::Complex),
                        {Vec(z.data().begin(), z.data().end()), Vec(x.data().begin(), x.data().end())});
  const auto piv = l1::lower_basis_constant(zx, kOracleMesh);
  o.require(piv.contains(1.0 / std::sqrt(2.0)) && piv.width() <= kPauliAnchorTol,
            "Pauli anchor [" + fmt("%.6f", piv.lo) + ", " + fmt("%.6f", piv.hi) + "]");
  o.note(std::to_string(agree) + "/50 random families agree, max width " + fmt("%.2e", max_width) +
         "; Pauli [" + fmt("%.5f", piv.lo) + ", " + fmt("%.5f", piv.hi) + "]");
  return o;
}

// Independent pairwise check: no codeword inside the radius floor-1 ball of another.
bool floor_holds(const std::vector<spin::Word>& words, std::size_t m, unsigned floor) {
  auto code = [m](const spin::Word& w) {
    std::size_t c = 0;
    for (auto s : w) c = c * m + s;
    return c;
  };
  std::unordered_set<std::size_t> set;
  for (const auto& w : words)
    if (!set.insert(code(w)).second) return false;
  for (const auto& w : words) {
    spin::Word v = w;
    std::function<bool(std::size_t, unsigned)> walk = [&](std::size_t from, unsigned left) {
      if (left == 0) return true;
      for (std::size_t i = from; i < v.size(); ++i) {
        const auto keep = v[i];
        for (std::uint8_t s = 0; s < m; ++s) {
          if (s == keep) continue;
          v[i] = s;
          if (set.count(code(v)) || !walk(i + 1, left - 1)) {
            v[i] = keep;
            return false;
          }
        }
        v[i] = keep;
      }
      return true;
    };
    if (!walk(0, floor - 1)) return false;
  }
  return true;
}

// 5. Comb packing grid.
Outcome criterion5() {
  Outcome o;
  std::size_t cells = 0;
  for (std::size_t m : {2, 3})
    for (std::size_t n = 6; n <= 12; ++n)
      for (double delta : {0.05, 0.1}) {
        const auto r = spin::comb_packing(m, n, delta);
        const unsigned floor = static_cast<unsigned>(std::ceil(3.0 * n * delta - 1e-9));
        double ball = 0.0, binom = 1.0;
        for (unsigned k = 0; k < floor; ++k) {
          ball += binom * std::pow(double(m - 1), k);
          binom = binom * double(n - k) / double(k + 1);
        }
        const double need = std::ceil(std::pow(double(m), double(n)) / ball);
        const std::string cell = "(" + std::to_string(m) + "," + std::to_string(n) + "," + fmt("%g", delta) + ")";
        o.require(r.hamming_floor == std::max(1u, floor), cell + " floor");
        o.require(static_cast<double>(r.words.size()) >= need, cell + " |Q| below counting bound");
        o.require(floor_holds(r.words, m, r.hamming_floor), cell + " Hamming floor violated");
        ++cells;
      }
  const auto anchor = spin::comb_packing(2, 10, 0.1);
  o.require(std::ceil(anchor.bound_rhs) == 19.0, "anchor bound " + fmt("%g", std::ceil(anchor.bound_rhs)));
  o.note(std::to_string(cells) + " cells; anchor (2,10,0.1) bound " + fmt("%g", std::ceil(anchor.bound_rhs)) +
         ", |Q| " + std::to_string(anchor.words.size()));
  return o;
}

// 6. Classifier table.
Outcome criterion6() {
  Outcome o;
  using namespace isometry;
  struct Row {
    const char* name;
    PermutationSpec spec;
    Verdict linfty, ell1;
  };
  const std::vector<Row> rows{
      {"identity", PermutationSpec::identity(), Verdict::Zero, Verdict::Zero},
      {"shift", PermutationSpec::shift(1), Verdict::Infinite, Verdict::Infinite},
      {"blocks", PermutationSpec({}, IncreasingBlocks{0}, {}), Verdict::Infinite, Verdict::Zero},
      {"cycles", PermutationSpec({{-3, -2}, {5, 7, 9}}, std::nullopt, {}), Verdict::Zero, Verdict::Zero}};
  std::string table;
  for (const auto& r : rows) {
    const auto li = classify_linfty(r.spec), l1 = classify_ell1(r.spec);
    o.require(li.verdict == r.linfty && l1.verdict == r.ell1, std::string(r.name) + " verdict");
    o.require(verify_evidence(r.spec, li) && verify_evidence(r.spec, l1), std::string(r.name) + " evidence");
    table += std::string(table.empty() ? "" : ", ") + r.name + " (" + to_string(li.verdict) + ", " +
             to_string(l1.verdict) + ")";
  }
  o.note(table);
  return o;
}

approx::GrowthSequence real_shift_growth() {
  const auto space = FiniteNormedSpace::lp(1, 64);
  Vec e(64, 0.0), me(64, 0.0);
  e[0] = 1.0;
  me[0] = -1.0;
  approx::GrowthOptions opt;
  opt.rule = approx::LowerRule::CombPacking;
  return approx::hc_growth(approx::cyclic_shift(space), VectorFamily(space, {e, me}), kShiftDelta, kShiftHorizon,
                           approx::GrowthMode::Lower, opt);
}

// 7. Real-scalar shift slope.
Outcome criterion7() {
  Outcome o;
  const auto g = real_shift_growth();
  const double last = g.rows.back().normalized;
  o.require(last >= kShiftSlopeFloor, "slope at n = 12 is " + fmt("%.4f", last));
  std::string seq;
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    seq += (i ? " " : "") + fmt("%.3f", g.rows[i].normalized);
    if (i > 0 && g.rows[i].normalized < g.rows[i - 1].normalized)
      o.require(false, "slope drops at n = " + std::to_string(g.rows[i].n) + " (" +
                           fmt("%.4f", g.rows[i - 1].normalized) + " -> " + fmt("%.4f", g.rows[i].normalized) + ")");
  }
  o.note("slope at n = 12 " + fmt("%.4f", last) + "; sequence " + seq);
  return o;
}

// 8. Monotonicity and consistency suite.
Outcome criterion8() {
  Outcome o;
  auto lap = Clock::now();
  std::string laps;
  auto split = [&](const char* what) {
    laps += std::string(laps.empty() ? "" : ", ") + what + " " + fmt("%.1f s", seconds_since(lap));
    lap = Clock::now();
  };
  // rc_upper: non-increasing in delta, non-decreasing under enlargement.
  {
    const auto s = FiniteNormedSpace::lp(2, 2);
    const std::vector<VectorFamily> chain{VectorFamily(s, {Vec{0.6, 0.0}}),
                                          VectorFamily(s, {Vec{0.6, 0.0}, Vec{0.0, 0.8}}),
                                          VectorFamily(s, {Vec{0.6, 0.0}, Vec{0.0, 0.8}, Vec{0.6, 0.8}})};
    std::vector<double> prev(chain.size(), INFINITY);
    for (double d : {0.15, 0.2, 0.3, 0.5, 0.8, 1.2}) {
      double below = 0.0;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const double v = approx::rc_upper(s, chain[i], d).value;
        o.require(v <= prev[i], "rc_upper grows with delta at " + fmt("%g", d));
        o.require(v >= below, "rc_upper shrinks under enlargement at " + fmt("%g", d));
        prev[i] = v;
        below = v;
      }
    }
  }
  split("rc_upper");
  // rc_lower: non-increasing in delta, linear in a.
  {
    const auto fam = basis(FiniteNormedSpace::lp(1, 3), 3);
    double prev = INFINITY;
    for (double d : {0.05, 0.1, 0.3, 0.6, 0.9}) {
      const double one = approx::rc_lower(fam, d, 1.0).value;
      o.require(one <= prev, "rc_lower grows with delta at " + fmt("%g", d));
      for (double a : {0.5, 2.0, 3.0})
        o.require(std::fabs(approx::rc_lower(fam, d, a).value - a * one) <= 1e-12 * std::max(1.0, a * one),
                  "rc_lower not linear in a");
      prev = one;
    }
  }
  split("rc_lower");
  // Interval refinements nest.
  {
    std::mt19937_64 rng(0xC8);
    std::normal_distribution<double> g;
    for (int t = 0; t < 6; ++t) {
      const auto s = FiniteNormedSpace::lp(t % 3 == 0 ? 1.0 : (t % 3 == 1 ? 2.0 : normed::kInf), 3);
      std::vector<Vec> v(2 + t % 2, Vec(3));
      for (auto& row : v)
        for (auto& z : row) z = g(rng);
      const VectorFamily fam(s, v);
      l1::Interval coarse = l1::lower_basis_constant(fam, 0.05);
      for (double mesh : {0.025, 0.0125, 0.005}) {
        const auto fine = l1::lower_basis_constant(fam, mesh);
        o.require(fine.lo >= coarse.lo - kNestSlack && fine.hi <= coarse.hi + kNestSlack,
                  "refinement widens at mesh " + fmt("%g", mesh));
        coarse = fine;
      }
    }
  }
  split("nesting");
  // spn <= sep on a grid of shifts, metrics, horizons, and scales.
  std::size_t cells = 0, exact_cells = 0;
  {
    using namespace symbolic;
    const std::vector<SymbolicSystem> systems{SymbolicSystem::full_shift(2), SymbolicSystem::from_forbidden(2, {{1, 1}}),
                                              SymbolicSystem::from_forbidden(2, {{1, 1, 1}}),
                                              SymbolicSystem::full_shift(3)};
    for (auto sys : systems)
      for (std::size_t r : {1, 2}) {
        sys.set_metric({MetricKind::WeightedSum, r});
        for (std::size_t n = 1; n <= 4; ++n) {
          if (std::pow(double(sys.alphabet()), double(sys.metric().window(n))) > 512) continue;
          for (double eps : {0.2, 0.4, 0.7, 1.0, 1.3, 1.8, 2.4}) {
            const auto sep = sep_count(sys, n, eps, CountMode::Exact);
            const auto spn = spn_count(sys, n, eps, CountMode::Exact);
            // An unfinished search leaves sep a lower bound and spn an upper
            // bound, so the comparison still certifies the true inequality.
            o.require(spn.count <= sep.count, "spn > sep");
            ++cells;
            exact_cells += sep.exact && spn.exact;
          }
        }
      }
  }
  split("spn/sep");
  // hc(alpha^2) against hc(alpha) at fixed omega = {e0, e1}.
  double ratio = 0.0;
  {
    const auto space = FiniteNormedSpace::lp(1, 64);
    const auto omega = basis(space, 2);
    const auto a1 = approx::hc_growth(approx::cyclic_shift(space, 1), omega, kShiftDelta, kShiftHorizon,
                                      approx::GrowthMode::Lower);
    const auto a2 = approx::hc_growth(approx::cyclic_shift(space, 2), omega, kShiftDelta, kShiftHorizon,
                                      approx::GrowthMode::Lower);
    ratio = a2.rows.back().normalized / a1.rows.back().normalized;
    o.require(ratio >= kPowerRatioFloor, "alpha^2 ratio " + fmt("%.4f", ratio));
  }
  split("alpha^2");
  o.note("spn <= sep on " + std::to_string(cells) + " cells (" + std::to_string(exact_cells) + " exact); alpha^2/alpha slope ratio " + fmt("%.4f", ratio) + " (" +
         laps + ")");
  return o;
}

int run_lab(const std::string& args) {
  const std::string cmd = "\"" + kLab + "\" " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 9. CLI determinism.
Outcome criterion9() {
  Outcome o;
  const auto root = fs::temp_directory_path() / "calab_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  std::vector<fs::path> configs;
  for (const auto& e : fs::directory_iterator(kConfigs))
    if (e.path().extension() == ".json") configs.push_back(e.path());
  std::sort(configs.begin(), configs.end());
  for (const auto& cfg : configs) {
    const std::string stem = cfg.stem().string();
    const auto a = root / (stem + "_a"), b = root / (stem + "_b");
    const int ca = run_lab("run \"" + cfg.string() + "\" --quiet --out \"" + a.string() + "\"");
    const int cb = run_lab("run \"" + cfg.string() + "\" --quiet --out \"" + b.string() + "\"");
    if (ca != 0 || cb != 0) {
      o.require(false, stem + " exited " + std::to_string(ca) + "/" + std::to_string(cb));
      continue;
    }
    auto ma = json::parse(slurp(a / "manifest.json")), mb = json::parse(slurp(b / "manifest.json"));
    ma.erase("wall_time_s");
    mb.erase("wall_time_s");
    bool same = ma == mb;
    for (const auto& e : fs::directory_iterator(a))
      if (e.path().extension() == ".csv") same = same && slurp(e.path()) == slurp(b / e.path().filename());
    o.require(same, stem + " differs between runs");
  }

  const std::vector<std::string> malformed{
      "{\"experiment\": ",
      "[]",
      R"({"experiment": "no-such-kind"})",
      R"({"experiment": "packing", "params": {"m": [2], "n": [6]}})",
      R"({"experiment": "packing", "params": {"m": [2], "n": [6], "delta": [0.1]}, "extra": true})",
      R"({"experiment": "packing", "params": {"m": "two", "n": [6], "delta": [0.1]}})",
      R"({"experiment": "l1-constant", "params": {}})"};
  for (std::size_t i = 0; i < malformed.size(); ++i) {
    const auto cfg = root / ("bad" + std::to_string(i) + ".json");
    std::ofstream(cfg) << malformed[i];
    const auto out = root / ("bad" + std::to_string(i) + "_out");
    const int code = run_lab("run \"" + cfg.string() + "\" --out \"" + out.string() + "\"");
    o.require(code == 2, "malformed config " + std::to_string(i) + " exited " + std::to_string(code));
    o.require(!fs::exists(out), "malformed config " + std::to_string(i) + " wrote output");
  }
  fs::remove_all(root);
  o.note(std::to_string(configs.size()) + " configs rerun, " + std::to_string(malformed.size()) +
         " malformed configs rejected");
  return o;
}

}  // namespace

// Optional arguments pick criteria by number; default is all of them.
int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"subshift entropy", criterion1},
      {"Pauli-span norm identity", criterion2},
      {"CAR identities", criterion3},
      {"l1-equivalence oracle agreement", criterion4},
      {"comb packing grid", criterion5},
      {"classifier table", criterion6},
      {"real-scalar shift slope", criterion7},
      {"monotonicity and consistency", criterion8},
      {"CLI determinism", criterion9}};
  std::vector<bool> selected(criteria.size(), argc < 2);
  for (int a = 1; a < argc; ++a) {
    const long k = std::strtol(argv[a], nullptr, 10);
    if (k < 1 || k > static_cast<long>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[a]);
      return 2;
    }
    selected[k - 1] = true;
  }
  int failed = 0, ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected[i]) continue;
    ++ran;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s %zu %s [%.1f s]: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds_since(t0),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %d criteria failed\n", failed, ran);
  return failed == 0 ? 0 : 1;
}
