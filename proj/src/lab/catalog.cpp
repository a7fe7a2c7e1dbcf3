#include "calab/lab/catalog.hpp"

#include <algorithm>

namespace calab::lab {

const char* to_string(ParamType t) {
  switch (t) {
    case ParamType::Number:
      return "number";
    case ParamType::Integer:
      return "integer";
    case ParamType::Bool:
      return "bool";
    case ParamType::String:
      return "string";
    case ParamType::NumberList:
      return "number[]";
    case ParamType::IntegerList:
      return "integer[]";
    case ParamType::Object:
      return "object";
  }
  return "?";
}

namespace {

using P = ParamType;

std::vector<ExperimentInfo> build() {
  const InputDoc family{"family", "vector family JSON: {space, vectors, labels?}"};
  std::vector<ExperimentInfo> c = {
      {"l1-constant",
       "Lemma L-ell1",
       "upper, lower and equivalence constants of a family against the standard l1 basis",
       {family},
       {{"mesh", P::Number, false, "l1 covering radius of the coefficient grid (default 1e-3)"},
        {"grid_budget", P::Integer, false, "grid points summed over faces (default 2^24)"}}},
      {"l1-witness",
       "Theorem T-zero, Remark R-conj",
       "densest subset of an orbit window certified K-equivalent to the l1 basis",
       {{"family", "orbit window as a vector family; labels are iterate indices"}},
       {{"K", P::Number, true, "equivalence constant to certify"},
        {"density", P::IntegerList, true, "[num, den] minimum density"},
        {"mesh", P::Number, false, "grid mesh for the certification (default 0.05)"},
        {"budget", P::Integer, false, "certification calls (default 4096)"}}},
      {"rc-upper",
       "dual-ball net upper bound",
       "rc(omega, delta) <= net size of the dual unit ball at radius delta / max norm",
       {family},
       {{"deltas", P::NumberList, true, "approximation tolerances"},
        {"max_samples", P::Integer, false, "dual-ball grid samples (default 12000)"}}},
      {"rc-lower",
       "Lemma L-ell1",
       "log rc(omega, delta) >= n a ||gamma||^-2 (lower - delta)^2, in units of a",
       {family},
       {{"deltas", P::NumberList, true, "approximation tolerances"},
        {"a", P::Number, false, "universal constant (default 1)"},
        {"mesh", P::Number, false, "lower-constant grid mesh (default 1e-3)"}}},
      {"hc-growth",
       "Lemma L-ell1, Lemma L-comb, Prop P-prop",
       "finite-horizon sequence (1/n) log rc of the orbit union omega, ..., alpha^(n-1) omega",
       {{"family", "probe set omega"}},
       {{"system", P::String, true, "identity | cyclic-shift"},
        {"shift", P::Integer, false, "cyclic-shift step t (default 1)"},
        {"n_max", P::Integer, true, "horizon, at most 24"},
        {"delta", P::Number, true, "approximation tolerance"},
        {"mode", P::String, true, "upper | lower"},
        {"rule", P::String, false, "lower-mode rule: l1-basis | comb-packing (default l1-basis)"},
        {"a", P::Number, false, "universal constant (default 1)"},
        {"mesh", P::Number, false, "lower-constant grid mesh (default 1e-3)"}}},
      {"subshift-entropy",
       "Prop P-topol",
       "separated/spanning counts of a subshift of finite type against the spectral-radius oracle",
       {{"system", "subshift JSON: {alphabet, transition | forbidden, metric?}"}},
       {{"n", P::IntegerList, true, "horizons"},
        {"eps", P::NumberList, true, "strictly decreasing scales"},
        {"mode", P::String, false, "exact | greedy (default exact)"},
        {"node_budget", P::Integer, false, "branch-and-bound nodes per count (default 2000000)"}}},
      {"spin-check",
       "Lemma L-isometric, Example E-CAR",
       "Pauli-span norm formula and CAR identities on random coefficient draws",
       {},
       {{"pauli_sites", P::Integer, false, "sites 1..n for the Pauli-span check (default 6)"},
        {"pauli_draws", P::Integer, false, "draws per site count (default 100)"},
        {"car_sites", P::Integer, false, "sites 1..n for the anticommutator check (default 8)"},
        {"identity_sites", P::Integer, false, "sites 1..n for the norm identities (default 4)"},
        {"identity_draws", P::Integer, false, "draws per site count (default 20)"}}},
      {"packing",
       "Lemma L-comb",
       "greedy Hamming packings with floor ceil(3 n delta) against m^n / ball volume",
       {},
       {{"m", P::IntegerList, true, "alphabet sizes"},
        {"n", P::IntegerList, true, "word lengths"},
        {"delta", P::NumberList, true, "tolerances in (0, 1/6)"},
        {"counting_fallback", P::Bool, false, "report the counting bound above 10^6 words (default false)"}}},
      {"perm-classify",
       "Prop P-ellinftyIA, Prop P-ell1",
       "CA entropy verdicts for permutation-and-phase isometries of l_inf and l1",
       {{"spec", "permutation JSON: {cycles, blocks, default, phases?}"}},
       {{"window", P::IntegerList, false, "[lo, hi) for the orbit census (default [-32, 32))"},
        {"corroborate", P::Object, false,
         "{space: l1|linf, field: real|complex, delta, a, m, n_max, K, density, orbit_length} runs the "
         "empirical corroboration on the window"}}},
      {"shift-experiment",
       "Theorem T-shift, Lemma L-comb",
       "lower-bound slopes for the tensor shift on the Pauli span (lower bounds only)",
       {},
       {{"m", P::Integer, true, "phases on the circle, at most 8"},
        {"n_max", P::Integer, true, "horizon, at most 12"},
        {"delta", P::Number, false, "tolerance (default 0.05)"}}},
  };
  std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.kind < b.kind; });
  return c;
}

}  // namespace

const std::vector<ExperimentInfo>& catalog() {
  static const std::vector<ExperimentInfo> c = build();
  return c;
}

const ExperimentInfo* find_experiment(const std::string& kind) {
  for (const auto& e : catalog())
    if (e.kind == kind) return &e;
  return nullptr;
}

std::string format_catalog() {
  static constexpr const char* kDash = "\xE2\x80\x94";  // U+2014
  std::string out;
  for (const auto& e : catalog()) {
    out += e.kind + " " + kDash + " " + e.exercises + "\n";
    out += "    " + e.summary + "\n";
    for (const auto& in : e.inputs) out += "    input  " + in.name + ": " + in.doc + "\n";
    for (const auto& p : e.params)
      out += "    param  " + p.name + " (" + to_string(p.type) + (p.required ? ", required" : "") + "): " + p.doc +
             "\n";
  }
  return out;
}

}  // namespace calab::lab
