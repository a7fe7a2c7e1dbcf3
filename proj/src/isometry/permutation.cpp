#include "calab/isometry/permutation.hpp"

#include <cmath>
#include <sstream>

#include "calab/error.hpp"

namespace calab::isometry {

PermutationSpec::PermutationSpec(std::vector<std::vector<long long>> cycles, std::optional<IncreasingBlocks> blocks,
                                 DefaultRule rule)
    : cycles_(std::move(cycles)), blocks_(blocks), rule_(rule) {
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    if (cycles_[c].empty()) throw InvalidArgument("empty cycle");
    for (std::size_t i = 0; i < cycles_[c].size(); ++i) {
      const long long s = cycles_[c][i];
      if (!cycle_pos_.emplace(s, std::make_pair(c, i)).second)
        throw InvalidArgument("cycles are not disjoint at " + std::to_string(s));
      if (blocks_ && s >= blocks_->origin)
        throw InvalidArgument("cycle point " + std::to_string(s) + " lies in the block family's range");
    }
  }
  if (rule_.kind == DefaultKind::ShiftBy) {
    if (rule_.t == 0) throw InvalidArgument("ShiftBy needs a nonzero step");
    if (blocks_) throw InvalidArgument("ShiftBy on a half-line complement is not a bijection");
  }
}

std::optional<std::size_t> PermutationSpec::cycle_index(long long s) const {
  auto it = cycle_pos_.find(s);
  if (it == cycle_pos_.end()) return std::nullopt;
  return it->second.first;
}

long long PermutationSpec::block_of(long long s) const {
  if (!blocks_ || s < blocks_->origin) return 0;
  const long long off = s - blocks_->origin;
  auto i = static_cast<long long>(std::floor((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(off))) / 2.0));
  while (i * (i - 1) / 2 > off) --i;
  while (i * (i + 1) / 2 <= off) ++i;
  return i;
}

std::pair<long long, long long> PermutationSpec::block_range(long long i) const {
  const long long o = blocks_ ? blocks_->origin : 0;
  return {o + i * (i - 1) / 2, o + i * (i + 1) / 2};
}

long long PermutationSpec::complement_step(long long s, int dir) const {
  do {
    s += dir;
  } while (cycle_pos_.count(s));
  return s;
}

long long PermutationSpec::apply(long long s) const {
  if (auto it = cycle_pos_.find(s); it != cycle_pos_.end()) {
    const auto& cyc = cycles_[it->second.first];
    return cyc[(it->second.second + 1) % cyc.size()];
  }
  if (const long long i = block_of(s)) {
    const auto [b0, b1] = block_range(i);
    return s + 1 < b1 ? s + 1 : b0;
  }
  if (rule_.kind == DefaultKind::Identity) return s;
  const int dir = rule_.t > 0 ? 1 : -1;
  for (long long k = 0; k < std::llabs(rule_.t); ++k) s = complement_step(s, dir);
  return s;
}

long long PermutationSpec::inverse(long long s) const {
  if (auto it = cycle_pos_.find(s); it != cycle_pos_.end()) {
    const auto& cyc = cycles_[it->second.first];
    return cyc[(it->second.second + cyc.size() - 1) % cyc.size()];
  }
  if (const long long i = block_of(s)) {
    const auto [b0, b1] = block_range(i);
    return s > b0 ? s - 1 : b1 - 1;
  }
  if (rule_.kind == DefaultKind::Identity) return s;
  const int dir = rule_.t > 0 ? -1 : 1;
  for (long long k = 0; k < std::llabs(rule_.t); ++k) s = complement_step(s, dir);
  return s;
}

std::string PermutationSpec::describe() const {
  std::ostringstream os;
  os << cycles_.size() << " finite cycle(s)";
  if (blocks_) os << ", increasing blocks from " << blocks_->origin;
  if (rule_.kind == DefaultKind::Identity)
    os << ", identity elsewhere";
  else
    os << ", shift by " << rule_.t << " elsewhere";
  return os.str();
}

PhaseSpec::PhaseSpec(Kind kind, std::vector<cplx> values, cplx fallback)
    : kind_(kind), values_(std::move(values)), fallback_(fallback) {
  auto check = [](cplx z) {
    if (std::fabs(std::abs(z) - 1.0) > 1e-12) throw InvalidArgument("phases must have modulus 1");
  };
  for (auto z : values_) check(z);
  check(fallback_);
  if (kind_ == Kind::Periodic && values_.empty()) throw InvalidArgument("periodic phases need at least one value");
}

PhaseSpec PhaseSpec::constant(cplx value) { return PhaseSpec(Kind::Constant, {}, value); }
PhaseSpec PhaseSpec::periodic(std::vector<cplx> values) { return PhaseSpec(Kind::Periodic, std::move(values), 1.0); }
PhaseSpec PhaseSpec::per_cycle(std::vector<cplx> values, cplx fallback) {
  return PhaseSpec(Kind::PerCycle, std::move(values), fallback);
}

cplx PhaseSpec::at(long long s, const PermutationSpec& spec) const {
  switch (kind_) {
    case Kind::Constant:
      return fallback_;
    case Kind::Periodic: {
      const auto n = static_cast<long long>(values_.size());
      return values_[static_cast<std::size_t>(((s % n) + n) % n)];
    }
    case Kind::PerCycle:
      if (auto c = spec.cycle_index(s); c && *c < values_.size()) return values_[*c];
      return fallback_;
  }
  return fallback_;
}

bool PhaseSpec::is_real() const {
  if (fallback_.imag() != 0.0) return false;
  for (auto z : values_)
    if (z.imag() != 0.0) return false;
  return true;
}

namespace {

cplx parse_phase(const nlohmann::json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw InvalidArgument("phase values are numbers or [re, im] pairs");
}

void only_keys(const nlohmann::json& j, std::initializer_list<const char*> keys, const char* what) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const char* k : keys) ok = ok || key == k;
    if (!ok) throw InvalidArgument(std::string(what) + ": unknown field '" + key + "'");
  }
}

}  // namespace

PermutationSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("permutation spec must be an object");
  only_keys(j, {"cycles", "blocks", "default", "phases"}, "permutation spec");
  std::vector<std::vector<long long>> cycles;
  if (j.contains("cycles")) cycles = j.at("cycles").get<std::vector<std::vector<long long>>>();
  std::optional<IncreasingBlocks> blocks;
  if (j.contains("blocks") && !j.at("blocks").is_null()) {
    const auto& b = j.at("blocks");
    if (b.is_string()) {
      if (b.get<std::string>() != "increasing") throw InvalidArgument("blocks must be \"increasing\" or null");
      blocks = IncreasingBlocks{};
    } else if (b.is_object()) {
      only_keys(b, {"origin"}, "blocks");
      blocks = IncreasingBlocks{b.value("origin", 0LL)};
    } else {
      throw InvalidArgument("blocks must be \"increasing\", an object, or null");
    }
  }
  DefaultRule rule;
  if (j.contains("default")) {
    const auto& d = j.at("default");
    only_keys(d, {"kind", "t"}, "default");
    const auto kind = d.at("kind").get<std::string>();
    if (kind == "identity") {
      rule.kind = DefaultKind::Identity;
    } else if (kind == "shift") {
      rule.kind = DefaultKind::ShiftBy;
      rule.t = d.value("t", 1LL);
    } else {
      throw InvalidArgument("default.kind must be identity or shift");
    }
  }
  return PermutationSpec(std::move(cycles), blocks, rule);
}

PhaseSpec phases_from_json(const nlohmann::json& j) {
  if (j.is_null()) return PhaseSpec::constant();
  only_keys(j, {"kind", "value", "values", "default"}, "phases");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "constant") return PhaseSpec::constant(j.contains("value") ? parse_phase(j.at("value")) : cplx(1.0));
  std::vector<cplx> values;
  for (const auto& v : j.at("values")) values.push_back(parse_phase(v));
  if (kind == "periodic") return PhaseSpec::periodic(std::move(values));
  if (kind == "per-cycle")
    return PhaseSpec::per_cycle(std::move(values), j.contains("default") ? parse_phase(j.at("default")) : cplx(1.0));
  throw InvalidArgument("phases.kind must be constant, periodic, or per-cycle");
}

nlohmann::json spec_to_json(const PermutationSpec& spec) {
  nlohmann::json j;
  j["cycles"] = spec.cycles();
  if (spec.blocks())
    j["blocks"] = {{"origin", spec.blocks()->origin}};
  else
    j["blocks"] = nullptr;
  if (spec.default_rule().kind == DefaultKind::Identity)
    j["default"] = {{"kind", "identity"}};
  else
    j["default"] = {{"kind", "shift"}, {"t", spec.default_rule().t}};
  return j;
}

Truncation truncate(const PermutationSpec& spec, long long lo, long long hi) {
  if (hi <= lo) throw InvalidArgument("empty window");
  if (hi - lo > kMaxWindow) throw GuardExceeded("window longer than 10^6");
  const auto w = static_cast<std::size_t>(hi - lo);
  Truncation t;
  t.lo = lo;
  t.hi = hi;
  t.image.assign(w, 0);
  t.agrees.assign(w, 1);
  auto inside = [&](long long s) { return s >= lo && s < hi; };
  std::vector<char> open_end(w, 0);
  for (std::size_t i = 0; i < w; ++i) {
    const long long s = lo + static_cast<long long>(i);
    const long long img = spec.apply(s);
    if (inside(img))
      t.image[i] = img;
    else
      open_end[i] = 1;
  }
  for (std::size_t i = 0; i < w; ++i) {
    const long long s = lo + static_cast<long long>(i);
    if (inside(spec.inverse(s))) continue;
    // s starts an open chain; walk to its end and close it.
    long long cur = s;
    while (!open_end[static_cast<std::size_t>(cur - lo)]) cur = t.image[static_cast<std::size_t>(cur - lo)];
    t.image[static_cast<std::size_t>(cur - lo)] = s;
    t.agrees[static_cast<std::size_t>(cur - lo)] = spec.apply(cur) == s;
  }
  return t;
}

}  // namespace calab::isometry
