#include "calab/lab/config.hpp"

#include <algorithm>
#include <fstream>
#include <ios>
#include <set>
#include <sstream>

#include "calab/lab/catalog.hpp"

namespace calab::lab {
namespace {

using nlohmann::json;

bool is_integer(const json& v) { return v.is_number_integer() || v.is_number_unsigned(); }

bool matches(const json& v, ParamType t) {
  switch (t) {
    case ParamType::Number:
      return v.is_number();
    case ParamType::Integer:
      return is_integer(v);
    case ParamType::Bool:
      return v.is_boolean();
    case ParamType::String:
      return v.is_string();
    case ParamType::NumberList:
      if (!v.is_array() || v.empty()) return false;
      for (const auto& x : v)
        if (!x.is_number()) return false;
      return true;
    case ParamType::IntegerList:
      if (!v.is_array() || v.empty()) return false;
      for (const auto& x : v)
        if (!is_integer(x)) return false;
      return true;
    case ParamType::Object:
      return v.is_object();
  }
  return false;
}

}  // namespace

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> envelope{"experiment", "seed", "params", "inputs", "output"};
  for (const auto& [k, v] : j.items())
    if (!envelope.count(k)) throw ConfigError("unknown field '" + k + "'");

  ExperimentConfig c;
  c.raw = j;
  if (!j.contains("experiment") || !j["experiment"].is_string()) throw ConfigError("'experiment' must be a string");
  c.experiment = j["experiment"].get<std::string>();
  const ExperimentInfo* info = find_experiment(c.experiment);
  if (!info) throw ConfigError("unknown experiment '" + c.experiment + "'");

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !(j["seed"].is_number_integer() && j["seed"].get<long long>() >= 0))
      throw ConfigError("'seed' must be an unsigned integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }

  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ConfigError("'params' must be an object");
    c.params = j["params"];
  }
  for (const auto& [k, v] : c.params.items()) {
    const auto it = std::find_if(info->params.begin(), info->params.end(), [&](const auto& p) { return p.name == k; });
    if (it == info->params.end()) throw ConfigError(c.experiment + ": unknown parameter '" + k + "'");
    if (!matches(v, it->type))
      throw ConfigError(c.experiment + ": parameter '" + k + "' must be of type " + to_string(it->type));
  }
  for (const auto& p : info->params)
    if (p.required && !c.params.contains(p.name))
      throw ConfigError(c.experiment + ": missing parameter '" + p.name + "'");

  json inputs = json::object();
  if (j.contains("inputs")) {
    if (!j["inputs"].is_object()) throw ConfigError("'inputs' must be an object");
    inputs = j["inputs"];
  }
  for (const auto& [k, v] : inputs.items()) {
    const auto it = std::find_if(info->inputs.begin(), info->inputs.end(), [&](const auto& in) { return in.name == k; });
    if (it == info->inputs.end()) throw ConfigError(c.experiment + ": unknown input '" + k + "'");
    if (!v.is_string()) throw ConfigError(c.experiment + ": input '" + k + "' must be a path");
    const std::filesystem::path p = v.get<std::string>();
    c.inputs[k] = p.is_absolute() ? p : base_dir / p;
  }
  for (const auto& in : info->inputs)
    if (!c.inputs.count(in.name)) throw ConfigError(c.experiment + ": missing input '" + in.name + "'");

  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("'output' must be a path");
    const std::filesystem::path p = j["output"].get<std::string>();
    c.output = p.is_absolute() ? p : base_dir / p;
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return parse_config(j, path.parent_path());
}

}  // namespace calab::lab
