#include "calab/lab/runner.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ios>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "calab/approx/growth.hpp"
#include "calab/approx/rc_bounds.hpp"
#include "calab/approx/systems.hpp"
#include "calab/isometry/classify.hpp"
#include "calab/isometry/corroborate.hpp"
#include "calab/isometry/permutation.hpp"
#include "calab/l1/basis_constants.hpp"
#include "calab/l1/witness.hpp"
#include "calab/normed/io.hpp"
#include "calab/spin/car.hpp"
#include "calab/spin/packing.hpp"
#include "calab/spin/pauli.hpp"
#include "calab/spin/shift_experiment.hpp"
#include "calab/symbolic/entropy.hpp"
#include "calab/symbolic/subshift.hpp"

namespace calab::lab {
namespace {

using nlohmann::json;

// Coefficient draws for spin-check; fixed so that manifests are reproducible.
constexpr std::uint64_t kDrawSeed = 0x5eed2026;

json num_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

double number(const json& p, const char* key, double fallback) {
  return p.contains(key) ? p[key].get<double>() : fallback;
}

std::size_t count(const json& p, const char* key, std::size_t fallback) {
  if (!p.contains(key)) return fallback;
  const long long v = p[key].get<long long>();
  if (v < 0) throw ConfigError(std::string("parameter '") + key + "' must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::string text(const json& p, const char* key, const std::string& fallback) {
  return p.contains(key) ? p[key].get<std::string>() : fallback;
}

std::vector<double> numbers(const json& p, const char* key) { return p.at(key).get<std::vector<double>>(); }

std::vector<std::size_t> counts(const json& p, const char* key) {
  std::vector<std::size_t> out;
  for (const auto& v : p.at(key)) {
    if (v.get<long long>() < 0) throw ConfigError(std::string("parameter '") + key + "' must be nonnegative");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

Field field_param(const json& p, const char* key, Field fallback) {
  if (!p.contains(key)) return fallback;
  const std::string s = p[key].get<std::string>();
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw ConfigError(std::string("parameter '") + key + "' must be real or complex");
}

l1::Density density_param(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
    throw ConfigError("density must be [num, den]");
  const auto num = v[0].get<long long>(), den = v[1].get<long long>();
  if (den <= 0 || num < 0 || num > den) throw ConfigError("density must be a fraction in [0, 1]");
  return l1::make_density(num, den);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  }
}

Table growth_table(const approx::GrowthSequence& g, const std::string& name = "growth") {
  Table t{name, {"n", "bound", "normalized", "mode", "delta", "a"}, {}};
  for (const auto& r : g.rows)
    t.add({format_number(r.n), format_number(r.bound), format_number(r.normalized), approx::to_string(g.mode),
           format_number(g.delta), format_number(g.a)});
  return t;
}

json growth_json(const approx::GrowthSequence& g) {
  json rows = json::array();
  for (const auto& r : g.rows) {
    json row{{"n", r.n}, {"bound", num_json(r.bound)}, {"normalized", num_json(r.normalized)},
             {"family_size", r.family_size}};
    if (g.mode == approx::GrowthMode::Lower && g.rule == approx::LowerRule::CombPacking) {
      row["packing_size"] = r.packing_size;
      row["packing_exact"] = r.packing_exact;
    }
    rows.push_back(row);
  }
  return {{"system", g.system},
          {"mode", approx::to_string(g.mode)},
          {"rule", approx::to_string(g.rule)},
          {"delta", g.delta},
          {"a", g.a},
          {"rows", rows},
          {"notes", g.notes}};
}

constexpr const char* kUnitsNote = "lower bounds on log rc are in units of the universal constant a";

RunResult run_l1_constant(const ExperimentConfig& c) {
  const auto family = normed::load_family(c.inputs.at("family"));
  const double mesh = number(c.params, "mesh", 1e-3);
  l1::LowerOptions lo;
  lo.grid_budget = count(c.params, "grid_budget", lo.grid_budget);
  RunResult r;
  const double upper = l1::upper_basis_constant(family);
  const l1::Interval lower = l1::lower_basis_constant(family, mesh, lo);
  r.outputs["family_size"] = family.size();
  r.outputs["space"] = normed::space_to_json(family.space());
  r.outputs["upper"] = upper;
  r.outputs["lower"] = l1::to_json(lower);
  if (lower.hi == 0.0) {
    r.outputs["equivalence"] = nullptr;
    r.outputs["isomorphism"] = false;
    r.notes.push_back("lower constant is 0: the family is not equivalent to an l1 basis");
  } else {
    r.outputs["equivalence"] = l1::to_json(l1::equivalence_constant(family, mesh, lo));
    r.outputs["isomorphism"] = lower.lo > 0.0;
  }
  return r;
}

RunResult run_l1_witness(const ExperimentConfig& c) {
  const auto orbit = normed::load_family(c.inputs.at("family"));
  const double K = c.params.at("K").get<double>();
  l1::WitnessOptions o;
  o.mesh = number(c.params, "mesh", o.mesh);
  o.budget = count(c.params, "budget", o.budget);
  const auto rep = l1::find_l1_witness(orbit, K, density_param(c.params.at("density")), o);
  RunResult r;
  r.outputs["witness"] = l1::to_json(rep, K);
  r.notes.push_back(rep.found ? "witness found: the reported set is certified K-equivalent to the l1 basis"
                              : "no certified witness at the requested density; the best candidate is reported");
  return r;
}

RunResult run_rc_upper(const ExperimentConfig& c) {
  const auto family = normed::load_family(c.inputs.at("family"));
  normed::NetOptions net;
  net.max_samples = count(c.params, "max_samples", net.max_samples);
  RunResult r;
  Table t{"rc_upper", {"delta", "rc_upper", "mesh", "covering_radius", "family_size"}, {}};
  json rows = json::array();
  for (double delta : numbers(c.params, "deltas")) {
    const auto b = approx::rc_upper(family.space(), family, delta, net);
    t.add({format_number(delta), format_number(b.value), format_number(b.mesh), format_number(b.covering_radius),
           format_number(b.family_size)});
    rows.push_back({{"delta", delta}, {"rc_upper", b.value}, {"mesh", b.mesh}, {"covering_radius", b.covering_radius}});
  }
  r.outputs["bounds"] = rows;
  r.tables.push_back(std::move(t));
  return r;
}

RunResult run_rc_lower(const ExperimentConfig& c) {
  const auto family = normed::load_family(c.inputs.at("family"));
  const double a = number(c.params, "a", 1.0);
  const double mesh = number(c.params, "mesh", 1e-3);
  RunResult r;
  Table t{"rc_lower", {"delta", "a", "log_rc_lower", "lower_lo", "upper_constant", "status"}, {}};
  json rows = json::array();
  for (double delta : numbers(c.params, "deltas")) {
    try {
      const auto b = approx::rc_lower(family, delta, a, mesh);
      t.add({format_number(delta), format_number(a), format_number(b.value), format_number(b.lower_constant.lo),
             format_number(b.upper_constant), "ok"});
      rows.push_back({{"delta", delta}, {"log_rc_lower", b.value}, {"lower", l1::to_json(b.lower_constant)},
                      {"upper", b.upper_constant}});
    } catch (const HypothesisNotMet& e) {
      t.add({format_number(delta), format_number(a), "", "", "", "hypothesis-not-met"});
      rows.push_back({{"delta", delta}, {"log_rc_lower", nullptr}, {"reason", e.what()}});
    }
  }
  r.outputs["a"] = a;
  r.outputs["bounds"] = rows;
  r.notes.push_back(kUnitsNote);
  r.tables.push_back(std::move(t));
  return r;
}

RunResult run_hc_growth(const ExperimentConfig& c) {
  const auto omega = normed::load_family(c.inputs.at("family"));
  const std::string sys = text(c.params, "system", "");
  std::optional<approx::IsometrySystem> system;
  if (sys == "identity")
    system = approx::identity_system(omega.space());
  else if (sys == "cyclic-shift")
    system = approx::cyclic_shift(omega.space(), c.params.value("shift", 1LL));
  else
    throw ConfigError("hc-growth: system must be identity or cyclic-shift");

  const std::string mode = text(c.params, "mode", "");
  if (mode != "upper" && mode != "lower") throw ConfigError("hc-growth: mode must be upper or lower");
  const std::string rule = text(c.params, "rule", "l1-basis");
  if (rule != "l1-basis" && rule != "comb-packing") throw ConfigError("hc-growth: rule must be l1-basis or comb-packing");

  approx::GrowthOptions o;
  o.a = number(c.params, "a", 1.0);
  o.mesh = number(c.params, "mesh", o.mesh);
  o.rule = rule == "l1-basis" ? approx::LowerRule::L1Basis : approx::LowerRule::CombPacking;
  const auto g = approx::hc_growth(*system, omega, c.params.at("delta").get<double>(), count(c.params, "n_max", 0),
                                   mode == "upper" ? approx::GrowthMode::Upper : approx::GrowthMode::Lower, o);
  RunResult r;
  r.outputs["growth"] = growth_json(g);
  for (const auto& n : g.notes) r.notes.push_back(n);
  r.tables.push_back(growth_table(g));
  return r;
}

RunResult run_subshift_entropy(const ExperimentConfig& c) {
  const auto system = symbolic::load_system(c.inputs.at("system"));
  const std::string mode = text(c.params, "mode", "exact");
  if (mode != "exact" && mode != "greedy") throw ConfigError("subshift-entropy: mode must be exact or greedy");
  symbolic::CountOptions o;
  o.node_budget = count(c.params, "node_budget", o.node_budget);
  const auto est = symbolic::entropy_estimate(system, counts(c.params, "n"), numbers(c.params, "eps"),
                                              mode == "exact" ? symbolic::CountMode::Exact : symbolic::CountMode::Greedy,
                                              o);
  RunResult r;
  Table t{"entropy", {"n", "eps", "sep", "spn", "sep_rate", "spn_rate", "sep_exact", "spn_exact"}, {}};
  for (const auto& cell : est.cells)
    t.add({format_number(cell.n), format_number(cell.eps), format_number(cell.sep.count), format_number(cell.spn.count),
           format_number(cell.sep_rate), format_number(cell.spn_rate), format_bool(cell.sep.exact),
           format_bool(cell.spn.exact)});
  r.outputs["system"] = system.describe();
  r.outputs["extrapolated"] = est.extrapolated;
  r.outputs["oracle"] = est.oracle ? json(*est.oracle) : json(nullptr);
  r.outputs["spn_le_sep"] = est.spn_le_sep;
  if (est.oracle && *est.oracle > 0.0)
    r.outputs["relative_error"] = std::fabs(est.extrapolated - *est.oracle) / *est.oracle;
  if (mode == "greedy") r.notes.push_back("greedy counts: sep is a lower bound and spn an upper bound");
  r.tables.push_back(std::move(t));
  return r;
}

RunResult run_spin_check(const ExperimentConfig& c) {
  const std::size_t pauli_sites = count(c.params, "pauli_sites", 6);
  const std::size_t pauli_draws = count(c.params, "pauli_draws", 100);
  const std::size_t car_sites = count(c.params, "car_sites", 8);
  const std::size_t id_sites = count(c.params, "identity_sites", 4);
  const std::size_t id_draws = count(c.params, "identity_draws", 20);
  std::mt19937_64 rng(kDrawSeed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);

  RunResult r;
  Table t{"spin_check", {"check", "n", "draw", "value", "expected", "residual", "pass"}, {}};
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // passed, total
  auto record = [&](const std::string& check, std::size_t n, std::size_t draw, double value, double expected,
                    double residual, bool pass) {
    t.add({check, format_number(n), format_number(draw), format_number(value), format_number(expected),
           format_number(residual), format_bool(pass)});
    auto& [ok, total] = tally[check];
    ok += pass;
    ++total;
  };

  for (std::size_t n = 1; n <= pauli_sites; ++n)
    for (std::size_t d = 0; d < pauli_draws; ++d) {
      spin::PauliCoefficients cs(n);
      for (auto& [cc, dd] : cs) {
        cc = coef(rng);
        dd = coef(rng);
      }
      const auto v = spin::pauli_span_norm(cs, true);
      const double res = std::fabs(v.formula - *v.matrix_norm);
      record("pauli-span-norm", n, d, *v.matrix_norm, v.formula, res, res <= 1e-9);
    }
  for (std::size_t n = 1; n <= car_sites; ++n) {
    const auto fam = spin::car_generators(n);
    record("car-anticommutators", n, 0, 0.0, 0.0, 0.0, spin::check_car_relations(fam));
  }
  for (std::size_t n = 1; n <= id_sites; ++n) {
    const auto fam = spin::car_generators(n);
    for (std::size_t d = 0; d < id_draws; ++d) {
      std::vector<double> cs(n);
      for (auto& x : cs) x = coef(rng);
      const auto l2 = spin::car_l2_identity(fam, cs);
      record("car-l2-norm", n, d, l2.value, l2.expected, l2.residual, l2.pass);
      const auto l1n = spin::car_tensor_l1_identity(fam, cs);
      record("car-tensor-l1-norm", n, d, l1n.value, l1n.expected, l1n.residual, l1n.pass);
    }
  }
  bool all = true;
  json summary = json::object();
  for (const auto& [check, st] : tally) {
    summary[check] = {{"passed", st.first}, {"total", st.second}};
    all = all && st.first == st.second;
  }
  r.outputs["checks"] = summary;
  r.outputs["all_pass"] = all;
  r.tables.push_back(std::move(t));
  return r;
}

RunResult run_packing(const ExperimentConfig& c) {
  spin::PackingOptions o;
  o.counting_fallback = c.params.value("counting_fallback", false);
  RunResult r;
  Table t{"packing",
          {"m", "n", "delta", "hamming_floor", "size", "ball_volume", "bound_rhs", "stirling_rhs", "greedy", "verified"},
          {}};
  bool bound_met = true, verified = true;
  for (std::size_t m : counts(c.params, "m"))
    for (std::size_t n : counts(c.params, "n"))
      for (double delta : numbers(c.params, "delta")) {
        const auto p = spin::comb_packing(m, n, delta, o);
        t.add({format_number(m), format_number(n), format_number(delta), format_number(std::size_t{p.hamming_floor}),
               format_number(p.size), format_number(p.ball_volume), format_number(p.bound_rhs),
               format_number(p.stirling_rhs), format_bool(p.greedy), format_bool(p.verified)});
        bound_met = bound_met && p.size >= std::ceil(p.bound_rhs - 1e-9);
        verified = verified && (!p.greedy || p.verified);
      }
  r.outputs["cells"] = t.rows.size();
  r.outputs["size_at_least_counting_bound"] = bound_met;
  r.outputs["all_verified"] = verified;
  r.tables.push_back(std::move(t));
  return r;
}

RunResult run_perm_classify(const ExperimentConfig& c) {
  const json sj = read_json(c.inputs.at("spec"));
  const auto spec = isometry::spec_from_json(sj);
  const auto phases = isometry::phases_from_json(sj.is_object() && sj.contains("phases") ? sj["phases"] : json());
  long long lo = -32, hi = 32;
  if (c.params.contains("window")) {
    const auto w = c.params["window"].get<std::vector<long long>>();
    if (w.size() != 2) throw ConfigError("perm-classify: window must be [lo, hi]");
    lo = w[0];
    hi = w[1];
  }

  RunResult r;
  const auto census = isometry::orbit_census(spec, lo, hi);
  Table t{"census", {"first", "size", "kind", "in_window"}, {}};
  for (const auto& o : census.orbits)
    t.add({format_number(o.first), o.size ? format_number(o.size) : "inf", isometry::to_string(o.kind),
           format_number(o.in_window)});
  r.outputs["spec"] = isometry::spec_to_json(spec);
  r.outputs["window"] = {lo, hi};
  r.outputs["census"] = {{"orbits", census.orbits.size()},          {"max_finite", census.max_finite},
                         {"bounded", census.bounded},               {"unbounded_finite", census.unbounded_finite},
                         {"has_infinite", census.has_infinite},     {"infinite_orbits", census.infinite_orbits},
                         {"global_bound", census.global_bound}};
  const auto linf = isometry::classify_linfty(spec);
  const auto ell1 = isometry::classify_ell1(spec);
  r.outputs["verdicts"] = {{"linfty", isometry::to_string(linf.verdict)}, {"ell1", isometry::to_string(ell1.verdict)}};
  r.outputs["linfty"] = isometry::to_json(linf);
  r.outputs["linfty"]["evidence_verified"] = isometry::verify_evidence(spec, linf);
  r.outputs["ell1"] = isometry::to_json(ell1);
  r.outputs["ell1"]["evidence_verified"] = isometry::verify_evidence(spec, ell1);
  r.tables.push_back(std::move(t));

  if (c.params.contains("corroborate")) {
    const json& p = c.params["corroborate"];
    static const std::set<std::string> keys{"space", "field", "delta", "a", "m", "n_max", "K",
                                            "density", "orbit_length", "probe"};
    for (const auto& [k, v] : p.items())
      if (!keys.count(k)) throw ConfigError("perm-classify: unknown corroborate field '" + k + "'");
    try {
      isometry::CorroborationOptions o;
      const std::string space = text(p, "space", "l1");
      if (space != "l1" && space != "linf") throw ConfigError("perm-classify: corroborate.space must be l1 or linf");
      o.space = space == "l1" ? isometry::SequenceSpace::L1 : isometry::SequenceSpace::Linfty;
      o.field = field_param(p, "field", Field::Complex);
      o.m = count(p, "m", o.m);
      o.n_max = count(p, "n_max", o.n_max);
      o.K = number(p, "K", o.K);
      if (p.contains("density")) o.density = density_param(p["density"]);
      o.orbit_length = count(p, "orbit_length", o.orbit_length);
      if (p.contains("probe")) o.probe = p["probe"].get<long long>();
      const auto rep = isometry::empirical_corroboration(spec, phases, lo, hi, number(p, "delta", 0.05),
                                                         number(p, "a", 1.0), o);
      json cj{{"space", isometry::to_string(rep.space)},
              {"verdict", isometry::to_string(rep.classification.verdict)},
              {"corroborated", rep.corroborated},
              {"support_size", rep.support.size()}};
      if (rep.growth) {
        cj["growth"] = growth_json(*rep.growth);
        r.tables.push_back(growth_table(*rep.growth));
        r.notes.push_back("growth rows are certified lower bounds on log rc");
      }
      if (rep.witness) cj["witness"] = l1::to_json(*rep.witness, o.K);
      r.outputs["corroboration"] = cj;
    } catch (const json::exception& e) {
      throw ConfigError(std::string("perm-classify: corroborate: ") + e.what());
    }
  }
  r.notes.push_back("verdicts follow from the presentation; phases never affect them");
  return r;
}

RunResult run_shift_experiment(const ExperimentConfig& c) {
  const auto g = spin::shift_growth_experiment(count(c.params, "m", 0), count(c.params, "n_max", 0),
                                               number(c.params, "delta", 0.05));
  RunResult r;
  r.outputs["growth"] = growth_json(g);
  r.outputs["label"] = "lower-bound slopes only; the limit value is not certified";
  for (const auto& n : g.notes) r.notes.push_back(n);
  r.tables.push_back(growth_table(g));
  return r;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& c) {
  static const std::map<std::string, std::function<RunResult(const ExperimentConfig&)>> dispatch{
      {"l1-constant", run_l1_constant},       {"l1-witness", run_l1_witness},
      {"rc-upper", run_rc_upper},             {"rc-lower", run_rc_lower},
      {"hc-growth", run_hc_growth},           {"subshift-entropy", run_subshift_entropy},
      {"spin-check", run_spin_check},         {"packing", run_packing},
      {"perm-classify", run_perm_classify},   {"shift-experiment", run_shift_experiment},
  };
  const auto it = dispatch.find(c.experiment);
  if (it == dispatch.end()) throw ConfigError("unknown experiment '" + c.experiment + "'");
  return it->second(c);
}

json make_manifest(const ExperimentConfig& c, const RunResult& r, double wall_time_s) {
  json tables = json::array();
  for (const auto& t : r.tables) tables.push_back(t.name + ".csv");
  return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
          {"experiment", c.experiment},
          {"seed", c.seed},
          {"config", c.raw},
          {"wall_time_s", wall_time_s},
          {"outputs", r.outputs},
          {"tables", tables},
          {"notes", r.notes}};
}

void write_outputs(const std::filesystem::path& dir, const ExperimentConfig& c, const RunResult& r,
                   double wall_time_s) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create " + dir.string());
  for (const auto& t : r.tables) write_atomic(dir / (t.name + ".csv"), to_csv(t));
  write_atomic(dir / "manifest.json", make_manifest(c, r, wall_time_s).dump(2) + "\n");
}

ExitCode exit_code_for(const std::exception& e) {
  if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e))
    return ExitCode::Schema;
  if (dynamic_cast<const GuardExceeded*>(&e)) return ExitCode::Guard;
  if (dynamic_cast<const std::ios_base::failure*>(&e) || dynamic_cast<const std::filesystem::filesystem_error*>(&e))
    return ExitCode::Io;
  return ExitCode::Failure;
}

json error_report(const std::exception& e) {
  std::string kind = "error";
  if (dynamic_cast<const ConfigError*>(&e))
    kind = "schema";
  else if (dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e))
    kind = "invalid-input";
  else if (dynamic_cast<const GuardExceeded*>(&e))
    kind = "guard";
  else if (dynamic_cast<const HypothesisNotMet*>(&e))
    kind = "hypothesis-not-met";
  else if (dynamic_cast<const InsufficientWindow*>(&e))
    kind = "insufficient-window";
  else if (dynamic_cast<const EmptySystem*>(&e))
    kind = "empty-system";
  else if (dynamic_cast<const NotAnIsomorphism*>(&e))
    kind = "not-an-isomorphism";
  else if (exit_code_for(e) == ExitCode::Io)
    kind = "io";
  return {{"error", {{"kind", kind}, {"message", e.what()}}}, {"exit_code", static_cast<int>(exit_code_for(e))}};
}

}  // namespace calab::lab
