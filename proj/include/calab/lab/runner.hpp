#pragma once

#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "calab/lab/config.hpp"
#include "calab/lab/csv.hpp"

namespace calab::lab {

enum class ExitCode : int { Ok = 0, Failure = 1, Schema = 2, Guard = 3, Io = 4 };

struct RunResult {
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<std::string> notes;
  std::vector<Table> tables;
};

// Executes the configured experiment. Module errors propagate.
RunResult run_experiment(const ExperimentConfig& config);

// {"tool", "experiment", "seed", "config", "wall_time_s", "outputs", "tables",
//  "notes"}. Only wall_time_s varies between reruns.
nlohmann::json make_manifest(const ExperimentConfig& config, const RunResult& result, double wall_time_s);

// Creates dir, then writes one CSV per table and manifest.json, each atomically.
void write_outputs(const std::filesystem::path& dir, const ExperimentConfig& config, const RunResult& result,
                   double wall_time_s);

// ConfigError/InvalidArgument -> 2, GuardExceeded -> 3, I/O -> 4, others -> 1.
ExitCode exit_code_for(const std::exception& e);
nlohmann::json error_report(const std::exception& e);

}  // namespace calab::lab
