#include "calab/symbolic/subshift.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "calab/error.hpp"

namespace calab::symbolic {

namespace {

bool contains_any(const Word& w, const std::vector<Word>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.size() > w.size()) continue;
    if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return true;
  }
  return false;
}

std::string word_string(const Word& w) {
  const bool digits = std::all_of(w.begin(), w.end(), [](auto c) { return c < 10; });
  std::string s;
  for (auto c : w) {
    if (!digits && !s.empty()) s += ',';
    s += std::to_string(c);
  }
  return s;
}

}  // namespace

SymbolicSystem::SymbolicSystem(std::size_t alphabet, std::size_t block, std::vector<Word> states,
                               std::vector<std::vector<std::size_t>> next, Metric metric, std::string origin)
    : alphabet_(alphabet), block_(block), metric_(metric), origin_(std::move(origin)) {
  // Trim states without a successor or a predecessor until stable.
  const std::size_t s = states.size();
  std::vector<char> alive(s, 1);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<std::size_t> indeg(s, 0), outdeg(s, 0);
    for (std::size_t i = 0; i < s; ++i) {
      if (!alive[i]) continue;
      for (std::size_t j : next[i]) {
        if (!alive[j]) continue;
        ++outdeg[i];
        ++indeg[j];
      }
    }
    for (std::size_t i = 0; i < s; ++i) {
      if (alive[i] && (indeg[i] == 0 || outdeg[i] == 0)) {
        alive[i] = 0;
        changed = true;
      }
    }
  }
  std::vector<std::size_t> remap(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    if (!alive[i]) continue;
    remap[i] = states_.size();
    states_.push_back(states[i]);
  }
  next_.resize(states_.size());
  for (std::size_t i = 0; i < s; ++i) {
    if (!alive[i]) continue;
    for (std::size_t j : next[i])
      if (alive[j]) next_[remap[i]].push_back(remap[j]);
    auto& nx = next_[remap[i]];
    std::sort(nx.begin(), nx.end(), [this](std::size_t a, std::size_t b) { return states_[a].back() < states_[b].back(); });
  }
}

SymbolicSystem SymbolicSystem::from_transition(const TransitionMatrix& a, Metric metric) {
  const std::size_t m = a.size();
  if (m == 0 || m > 255) throw InvalidArgument("transition matrix size must be in [1, 255]");
  std::vector<Word> states;
  std::vector<std::vector<std::size_t>> next(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != m) throw InvalidArgument("transition matrix must be square");
    states.push_back(Word{static_cast<std::uint8_t>(i)});
    for (std::size_t j = 0; j < m; ++j) {
      if (a[i][j] != 0 && a[i][j] != 1) throw InvalidArgument("transition entries must be 0 or 1");
      if (a[i][j]) next[i].push_back(j);
    }
  }
  std::ostringstream os;
  os << "sft(" << m << " symbols, transition matrix)";
  return SymbolicSystem(m, 1, std::move(states), std::move(next), metric, os.str());
}

SymbolicSystem SymbolicSystem::from_forbidden(std::size_t alphabet, const std::vector<Word>& forbidden, Metric metric) {
  if (alphabet == 0 || alphabet > 255) throw InvalidArgument("alphabet size must be in [1, 255]");
  std::size_t longest = 1;
  for (const auto& f : forbidden) {
    if (f.empty()) throw InvalidArgument("empty forbidden word");
    for (auto c : f)
      if (c >= alphabet) throw InvalidArgument("forbidden word uses a symbol outside the alphabet");
    longest = std::max(longest, f.size());
  }
  const std::size_t block = std::max<std::size_t>(1, longest - 1);
  const double count = std::pow(static_cast<double>(alphabet), static_cast<double>(block));
  if (count > 1e6) throw GuardExceeded("forbidden words need too many block states");

  std::vector<Word> states;
  Word w(block, 0);
  for (std::size_t idx = 0; idx < static_cast<std::size_t>(count); ++idx) {
    if (!contains_any(w, forbidden)) states.push_back(w);
    for (std::size_t i = block; i-- > 0;) {
      if (++w[i] < alphabet) break;
      w[i] = 0;
    }
  }
  // Successor of state a is the state a[1..] + s; states are sorted, so
  // binary search finds it.
  std::vector<std::vector<std::size_t>> next(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t s = 0; s < alphabet; ++s) {
      Word ext = states[i];
      ext.push_back(static_cast<std::uint8_t>(s));
      if (contains_any(ext, forbidden)) continue;
      Word succ(ext.begin() + 1, ext.end());
      auto it = std::lower_bound(states.begin(), states.end(), succ);
      if (it != states.end() && *it == succ) next[i].push_back(static_cast<std::size_t>(it - states.begin()));
    }
  }
  std::ostringstream os;
  os << "sft(" << alphabet << " symbols, forbidden {";
  for (std::size_t i = 0; i < forbidden.size(); ++i) os << (i ? ", " : "") << word_string(forbidden[i]);
  os << "})";
  return SymbolicSystem(alphabet, block, std::move(states), std::move(next), metric, os.str());
}

SymbolicSystem SymbolicSystem::full_shift(std::size_t alphabet, Metric metric) {
  TransitionMatrix a(alphabet, std::vector<int>(alphabet, 1));
  auto s = from_transition(a, metric);
  s.origin_ = "full shift on " + std::to_string(alphabet) + " symbols";
  return s;
}

TransitionMatrix SymbolicSystem::block_transition() const {
  TransitionMatrix a(states_.size(), std::vector<int>(states_.size(), 0));
  for (std::size_t i = 0; i < states_.size(); ++i)
    for (std::size_t j : next_[i]) a[i][j] = 1;
  return a;
}

std::vector<Word> SymbolicSystem::words(std::size_t len, std::size_t max_words) const {
  if (word_count(len) > static_cast<double>(max_words))
    throw GuardExceeded("more than " + std::to_string(max_words) + " admissible words of length " + std::to_string(len));
  std::vector<Word> out;
  if (len == 0) {
    if (!states_.empty()) out.emplace_back();
    return out;
  }
  if (len < block_) {
    for (const auto& s : states_) {
      Word p(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
      if (out.empty() || out.back() != p) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  const std::size_t steps = len - block_;
  Word w;
  std::vector<std::size_t> path;
  // Iterative DFS: path[i] is the state after i steps, choice[i] the index
  // into its successor list.
  std::vector<std::size_t> choice;
  for (std::size_t s0 = 0; s0 < states_.size(); ++s0) {
    w = states_[s0];
    path.assign(1, s0);
    choice.assign(1, 0);
    while (!path.empty()) {
      if (path.size() == steps + 1) {
        out.push_back(w);
        path.pop_back();
        choice.pop_back();
        if (!path.empty()) w.pop_back();
        continue;
      }
      const auto& nx = next_[path.back()];
      auto& c = choice.back();
      if (c == nx.size()) {
        path.pop_back();
        choice.pop_back();
        if (!path.empty()) w.pop_back();
        continue;
      }
      const std::size_t t = nx[c++];
      w.push_back(states_[t].back());
      path.push_back(t);
      choice.push_back(0);
    }
  }
  return out;
}

double SymbolicSystem::word_count(std::size_t len) const {
  if (states_.empty()) return 0.0;
  if (len == 0) return 1.0;
  if (len < block_) {
    std::vector<Word> prefixes;
    for (const auto& s : states_) prefixes.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(len));
    std::sort(prefixes.begin(), prefixes.end());
    return static_cast<double>(std::unique(prefixes.begin(), prefixes.end()) - prefixes.begin());
  }
  std::vector<double> v(states_.size(), 1.0), nv(states_.size());
  for (std::size_t step = 0; step < len - block_; ++step) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
      double acc = 0.0;
      for (std::size_t j : next_[i]) acc += v[j];
      nv[i] = acc;
    }
    v.swap(nv);
  }
  double total = 0.0;
  for (double x : v) total += x;
  return total;
}

double SymbolicSystem::distance(const Word& a, const Word& b, std::size_t n) const {
  if (metric_.kind == MetricKind::Coordinate0) {
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] != b[k]) return 1.0;
    return 0.0;
  }
  const std::size_t r = metric_.radius;
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double d = 0.0;
    for (std::size_t i = 0; i <= 2 * r; ++i) {
      const std::size_t off = i > r ? i - r : r - i;
      if (a[j + i] != b[j + i]) d += std::ldexp(1.0, -static_cast<int>(off));
    }
    worst = std::max(worst, d);
  }
  return worst;
}

std::string SymbolicSystem::describe() const { return origin_; }

namespace {

Word parse_word(const nlohmann::json& j) {
  Word w;
  if (j.is_string()) {
    for (char c : j.get<std::string>()) {
      if (c < '0' || c > '9') throw InvalidArgument("forbidden word strings use digits 0-9");
      w.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (!e.is_number_unsigned() || e.get<unsigned>() > 254) throw InvalidArgument("bad symbol in forbidden word");
      w.push_back(static_cast<std::uint8_t>(e.get<unsigned>()));
    }
  } else {
    throw InvalidArgument("forbidden words are strings or integer arrays");
  }
  return w;
}

}  // namespace

SymbolicSystem system_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidArgument("subshift must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "alphabet" && key != "transition" && key != "forbidden" && key != "metric")
      throw InvalidArgument("subshift: unknown field '" + key + "'");
  Metric metric;
  if (j.contains("metric")) {
    const auto& mj = j.at("metric");
    for (const auto& [key, _] : mj.items())
      if (key != "kind" && key != "radius") throw InvalidArgument("metric: unknown field '" + key + "'");
    const auto kind = mj.at("kind").get<std::string>();
    if (kind == "coordinate0")
      metric.kind = MetricKind::Coordinate0;
    else if (kind == "weighted-sum")
      metric.kind = MetricKind::WeightedSum;
    else
      throw InvalidArgument("metric.kind must be coordinate0 or weighted-sum");
    if (mj.contains("radius")) metric.radius = mj.at("radius").get<std::size_t>();
    if (metric.radius > 16) throw InvalidArgument("metric.radius must be at most 16");
  }
  const bool has_t = j.contains("transition"), has_f = j.contains("forbidden");
  if (has_t == has_f) throw InvalidArgument("subshift needs exactly one of transition or forbidden");
  if (has_t) {
    const auto a = j.at("transition").get<TransitionMatrix>();
    if (j.contains("alphabet") && j.at("alphabet").get<std::size_t>() != a.size())
      throw InvalidArgument("alphabet does not match the transition matrix");
    return SymbolicSystem::from_transition(a, metric);
  }
  if (!j.contains("alphabet")) throw InvalidArgument("forbidden-word subshift needs an alphabet size");
  std::vector<Word> forbidden;
  for (const auto& f : j.at("forbidden")) forbidden.push_back(parse_word(f));
  return SymbolicSystem::from_forbidden(j.at("alphabet").get<std::size_t>(), forbidden, metric);
}

SymbolicSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
  return system_from_json(j);
}

}  // namespace calab::symbolic
