#include "calab/l1/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "calab/error.hpp"

namespace calab::l1 {

using normed::VectorFamily;

Density make_density(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw InvalidArgument("density must be a nonnegative fraction");
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Density{0, 1} : Density{num / g, den / g};
}

bool operator<(const Density& a, const Density& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

namespace {

std::vector<long long> window_labels(const VectorFamily& orbit) {
  const std::size_t n = orbit.size();
  std::vector<long long> labels = orbit.labels();
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), 0LL);
  }
  std::set<long long> seen;
  for (long long l : labels) {
    if (l < 0 || l >= static_cast<long long>(n)) throw InvalidArgument("orbit labels must lie in [0, n)");
    if (!seen.insert(l).second) throw InvalidArgument("orbit labels must be distinct");
  }
  return labels;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

class Search {
 public:
  Search(const VectorFamily& orbit, double K, const WitnessOptions& options)
      : orbit_(orbit), K_(K), options_(options) {}

  // Certification of one candidate subset; nullopt once the budget is spent.
  std::optional<ThresholdResult> certify(const std::vector<std::size_t>& idx) {
    if (calls_ >= options_.budget) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++calls_;
    const VectorFamily sub = orbit_.subfamily(idx);
    const double u = upper_basis_constant(sub);
    const ThresholdResult r = certify_lower_at_least(sub, u / K_, options_.mesh, options_.lower);
    // Candidate ranking: larger sets first, then the smaller lower estimate of
    // the equivalence constant.
    const double score = r.best_value > 0.0 ? u / r.best_value : std::numeric_limits<double>::infinity();
    if (best_.empty() || idx.size() > best_.size() || (idx.size() == best_.size() && score < best_score_)) {
      best_ = idx;
      best_score_ = score;
    }
    return r;
  }

  std::size_t calls() const { return calls_; }
  bool exhausted() const { return exhausted_; }
  const std::vector<std::size_t>& best() const { return best_; }

 private:
  const VectorFamily& orbit_;
  double K_;
  const WitnessOptions& options_;
  std::size_t calls_ = 0;
  bool exhausted_ = false;
  std::vector<std::size_t> best_;
  double best_score_ = std::numeric_limits<double>::infinity();
};

}  // namespace

WitnessReport find_l1_witness(const VectorFamily& orbit, double K, Density min_density, const WitnessOptions& options) {
  if (orbit.empty()) throw InvalidArgument("empty orbit");
  if (!(K >= 1.0)) throw InvalidArgument("K must be at least 1");
  if (min_density.den <= 0 || min_density.num < 0) throw InvalidArgument("bad density");
  const std::vector<long long> labels = window_labels(orbit);
  const std::size_t n = orbit.size();
  // Smallest admissible size: ceil(min_density * n), at least 1.
  const auto need = static_cast<std::size_t>(
      std::max<std::int64_t>(1, (min_density.num * static_cast<std::int64_t>(n) + min_density.den - 1) / min_density.den));

  WitnessReport report;
  report.exhaustive = n <= kExhaustiveLimit;
  Search search(orbit, K, options);
  std::vector<std::size_t> hit;

  if (report.exhaustive) {
    for (std::size_t s = n; s >= need && s >= 1 && hit.empty() && !search.exhausted(); --s) {
      std::vector<std::size_t> c(s);
      std::iota(c.begin(), c.end(), 0);
      do {
        const auto r = search.certify(c);
        if (!r) break;
        if (r->decision == Decision::Certified) {
          hit = c;
          break;
        }
      } while (next_combination(c, n));
      if (s == 1) break;
    }
  } else {
    for (std::size_t start = 0; start < n && !search.exhausted(); ++start) {
      std::vector<std::size_t> cur{start};
      const auto r0 = search.certify(cur);
      if (!r0 || r0->decision != Decision::Certified) continue;
      while (!search.exhausted()) {
        std::size_t pick = n;
        double pick_value = -1.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (std::find(cur.begin(), cur.end(), j) != cur.end()) continue;
          std::vector<std::size_t> trial = cur;
          trial.insert(std::upper_bound(trial.begin(), trial.end(), j), j);
          const auto r = search.certify(trial);
          if (!r) break;
          if (r->decision == Decision::Certified && r->best_value > pick_value) {
            pick = j;
            pick_value = r->best_value;
          }
        }
        if (pick == n) break;
        cur.insert(std::upper_bound(cur.begin(), cur.end(), pick), pick);
      }
      if (cur.size() >= need && cur.size() > hit.size()) hit = cur;
      if (hit.size() == n) break;
    }
  }

  report.found = !hit.empty();
  const std::vector<std::size_t>& chosen = report.found ? hit : search.best();
  report.certifications = search.calls();
  report.budget_exhausted = search.exhausted();
  if (chosen.empty()) return report;
  for (std::size_t i : chosen) report.indices.push_back(labels[i]);
  std::sort(report.indices.begin(), report.indices.end());
  report.density = make_density(static_cast<std::int64_t>(chosen.size()), static_cast<std::int64_t>(n));
  const VectorFamily sub = orbit.subfamily(chosen);
  report.constants.upper = upper_basis_constant(sub);
  try {
    report.constants = basis_constants(sub, options.mesh, options.lower);
  } catch (const NotAnIsomorphism&) {
    report.constants.lower = lower_basis_constant(sub, options.mesh, options.lower);
    report.constants.equivalence.lo = report.constants.equivalence.hi = std::numeric_limits<double>::infinity();
  }
  return report;
}

namespace {

nlohmann::json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

nlohmann::json to_json(const Interval& iv) {
  nlohmann::json j;
  j["lo"] = number_or_inf(iv.lo);
  j["hi"] = number_or_inf(iv.hi);
  j["certificate"] = to_string(iv.certificate);
  if (iv.certificate == Certificate::LipschitzGrid) {
    j["mesh"] = iv.mesh;
    j["lipschitz"] = iv.lipschitz;
  }
  if (iv.clamped) j["clamped"] = true;
  return j;
}

nlohmann::json to_json(const WitnessReport& r, double K) {
  nlohmann::json j;
  j["found"] = r.found;
  j["I"] = r.indices;
  j["density"] = {{"num", r.density.num}, {"den", r.density.den}};
  j["lower"] = nlohmann::json::array({number_or_inf(r.constants.lower.lo), number_or_inf(r.constants.lower.hi)});
  j["upper"] = r.constants.upper;
  j["K"] = nlohmann::json::array({number_or_inf(r.constants.equivalence.lo), number_or_inf(r.constants.equivalence.hi)});
  j["K_target"] = K;
  j["certifications"] = r.certifications;
  j["budget_exhausted"] = r.budget_exhausted;
  j["search"] = r.exhaustive ? "exhaustive" : "greedy";
  return j;
}

}  // namespace calab::l1
