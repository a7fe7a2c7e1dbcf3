#include "calab/isometry/classify.hpp"

#include <algorithm>
#include <set>

#include "calab/error.hpp"

namespace calab::isometry {

const char* to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::Fixed:
      return "fixed";
    case OrbitKind::Cycle:
      return "cycle";
    case OrbitKind::Block:
      return "block";
    case OrbitKind::Infinite:
      return "infinite";
  }
  return "?";
}

const char* to_string(Verdict v) { return v == Verdict::Zero ? "Zero" : "Infinite"; }

const char* to_string(Evidence::Kind k) {
  switch (k) {
    case Evidence::Kind::BoundedOrbits:
      return "bounded-orbits";
    case Evidence::Kind::UnboundedFiniteOrbits:
      return "unbounded-finite-orbits";
    case Evidence::Kind::InfiniteOrbit:
      return "infinite-orbit";
    case Evidence::Kind::NoInfiniteOrbit:
      return "no-infinite-orbit";
  }
  return "?";
}

OrbitCensus orbit_census(const PermutationSpec& spec, long long lo, long long hi) {
  if (hi <= lo) throw InvalidArgument("empty window");
  if (hi - lo > kMaxWindow) throw InvalidArgument("window longer than 10^6");
  const auto w = static_cast<std::size_t>(hi - lo);
  std::vector<char> seen(w, 0);
  auto inside = [&](long long s) { return s >= lo && s < hi; };
  auto mark = [&](long long s) {
    if (!inside(s) || seen[static_cast<std::size_t>(s - lo)]) return false;
    seen[static_cast<std::size_t>(s - lo)] = 1;
    return true;
  };

  OrbitCensus c;
  for (long long s = lo; s < hi; ++s) {
    if (seen[static_cast<std::size_t>(s - lo)]) continue;
    OrbitRecord r;
    r.first = s;
    if (auto ci = spec.cycle_index(s)) {
      const auto& cyc = spec.cycles()[*ci];
      r.size = cyc.size();
      r.kind = r.size == 1 ? OrbitKind::Fixed : OrbitKind::Cycle;
      for (long long p : cyc) r.in_window += mark(p);
    } else if (const long long b = spec.block_of(s)) {
      const auto [b0, b1] = spec.block_range(b);
      r.size = static_cast<std::size_t>(b);
      r.kind = r.size == 1 ? OrbitKind::Fixed : OrbitKind::Block;
      for (long long p = std::max(b0, lo); p < std::min(b1, hi); ++p) r.in_window += mark(p);
    } else if (spec.default_rule().kind == DefaultKind::Identity) {
      r.size = 1;
      r.kind = OrbitKind::Fixed;
      r.in_window = mark(s);
    } else {
      // Infinite orbits are monotone in the complement order, so the points in
      // the window form one contiguous stretch of the orbit.
      r.size = 0;
      r.kind = OrbitKind::Infinite;
      r.in_window = mark(s);
      for (long long p = spec.apply(s); mark(p); p = spec.apply(p)) ++r.in_window;
      for (long long p = spec.inverse(s); mark(p); p = spec.inverse(p)) ++r.in_window;
    }
    if (r.size > 0) c.max_finite = std::max(c.max_finite, r.size);
    c.orbits.push_back(r);
  }
  c.unbounded_finite = spec.blocks().has_value();
  c.has_infinite = spec.default_rule().kind == DefaultKind::ShiftBy;
  c.infinite_orbits = c.has_infinite ? static_cast<std::size_t>(std::llabs(spec.default_rule().t)) : 0;
  c.bounded = !c.unbounded_finite && !c.has_infinite;
  for (const auto& cyc : spec.cycles()) c.global_bound = std::max(c.global_bound, cyc.size());
  return c;
}

namespace {

constexpr long long kCitedBlocks = 8;
constexpr std::size_t kSegmentLength = 16;

std::vector<long long> infinite_segment(const PermutationSpec& spec) {
  long long s = 0;
  while (spec.cycle_index(s)) ++s;
  std::vector<long long> seg{s};
  while (seg.size() < kSegmentLength) seg.push_back(spec.apply(seg.back()));
  return seg;
}

void cite_cycles(const PermutationSpec& spec, Evidence& e) {
  for (const auto& cyc : spec.cycles()) {
    e.finite_orbits.push_back(cyc);
    e.max_orbit = std::max(e.max_orbit, cyc.size());
  }
}

void cite_blocks(const PermutationSpec& spec, Evidence& e) {
  for (long long i = 1; i <= kCitedBlocks; ++i) {
    const auto [b0, b1] = spec.block_range(i);
    std::vector<long long> orbit;
    for (long long p = b0; p < b1; ++p) orbit.push_back(p);
    e.max_orbit = std::max(e.max_orbit, orbit.size());
    e.finite_orbits.push_back(std::move(orbit));
  }
}

bool is_cycle_of(const PermutationSpec& spec, const std::vector<long long>& orbit) {
  if (orbit.empty()) return false;
  if (std::set<long long>(orbit.begin(), orbit.end()).size() != orbit.size()) return false;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    if (spec.apply(orbit[i]) != orbit[(i + 1) % orbit.size()]) return false;
  return true;
}

}  // namespace

Classification classify_linfty(const PermutationSpec& spec) {
  Classification c;
  if (spec.default_rule().kind == DefaultKind::ShiftBy) {
    c.verdict = Verdict::Infinite;
    c.evidence.kind = Evidence::Kind::InfiniteOrbit;
    c.evidence.segment = infinite_segment(spec);
    c.reason = "an infinite orbit: orbit lengths are unbounded";
  } else if (spec.blocks()) {
    c.verdict = Verdict::Infinite;
    c.evidence.kind = Evidence::Kind::UnboundedFiniteOrbits;
    cite_blocks(spec, c.evidence);
    cite_cycles(spec, c.evidence);
    c.reason = "finite orbits of every length: no bound on orbit cardinality";
  } else {
    c.verdict = Verdict::Zero;
    c.evidence.kind = Evidence::Kind::BoundedOrbits;
    cite_cycles(spec, c.evidence);
    c.reason = "every orbit has at most " + std::to_string(c.evidence.max_orbit) + " points";
  }
  return c;
}

Classification classify_ell1(const PermutationSpec& spec) {
  Classification c;
  if (spec.default_rule().kind == DefaultKind::ShiftBy) {
    c.verdict = Verdict::Infinite;
    c.evidence.kind = Evidence::Kind::InfiniteOrbit;
    c.evidence.segment = infinite_segment(spec);
    c.reason = "an infinite orbit";
  } else {
    c.verdict = Verdict::Zero;
    c.evidence.kind = Evidence::Kind::NoInfiniteOrbit;
    cite_cycles(spec, c.evidence);
    if (spec.blocks()) cite_blocks(spec, c.evidence);
    c.reason = "no infinite orbit: a dense union of finite-dimensional invariant subspaces";
  }
  return c;
}

bool verify_evidence(const PermutationSpec& spec, const Classification& c) {
  for (const auto& orbit : c.evidence.finite_orbits)
    if (!is_cycle_of(spec, orbit)) return false;
  const auto& seg = c.evidence.segment;
  for (std::size_t i = 0; i + 1 < seg.size(); ++i)
    if (spec.apply(seg[i]) != seg[i + 1]) return false;
  if (std::set<long long>(seg.begin(), seg.end()).size() != seg.size()) return false;

  const bool shift = spec.default_rule().kind == DefaultKind::ShiftBy;
  switch (c.evidence.kind) {
    case Evidence::Kind::BoundedOrbits:
      if (c.verdict != Verdict::Zero || shift || spec.blocks()) return false;
      for (const auto& cyc : spec.cycles())
        if (cyc.size() > c.evidence.max_orbit) return false;
      return true;
    case Evidence::Kind::UnboundedFiniteOrbits: {
      if (c.verdict != Verdict::Infinite || !spec.blocks()) return false;
      std::size_t last = 0, grew = 0;
      for (const auto& orbit : c.evidence.finite_orbits) {
        if (spec.block_of(orbit.front()) == 0) continue;
        if (orbit.size() <= last) return false;
        last = orbit.size();
        ++grew;
      }
      return grew >= 2;
    }
    case Evidence::Kind::InfiniteOrbit: {
      if (c.verdict != Verdict::Infinite || !shift || seg.size() < 2) return false;
      // Monotone along the orbit, so it never closes up.
      const bool up = seg[1] > seg[0];
      for (std::size_t i = 0; i + 1 < seg.size(); ++i)
        if ((seg[i + 1] > seg[i]) != up) return false;
      return true;
    }
    case Evidence::Kind::NoInfiniteOrbit:
      return c.verdict == Verdict::Zero && !shift;
  }
  return false;
}

nlohmann::json to_json(const Classification& c) {
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  j["evidence"] = {{"kind", to_string(c.evidence.kind)},
                   {"max_orbit", c.evidence.max_orbit},
                   {"finite_orbits", c.evidence.finite_orbits},
                   {"segment", c.evidence.segment}};
  j["reason"] = c.reason;
  return j;
}

}  // namespace calab::isometry
