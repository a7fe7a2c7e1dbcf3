#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "calab/error.hpp"

namespace calab::lab {

inline constexpr const char* kToolName = "lab";
inline constexpr const char* kToolVersion = "1.0.0";

// Config rejected by the schema (exit 2).
class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// {"experiment": kind, "seed": u64, "params": {...}, "inputs": {name: path},
//  "output": dir}. Input paths are relative to the config file.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 0;  // echoed; every algorithm is deterministic
  nlohmann::json params = nlohmann::json::object();
  std::map<std::string, std::filesystem::path> inputs;
  std::optional<std::filesystem::path> output;
  nlohmann::json raw;  // the config as read, echoed into the manifest
};

// Validates the envelope and the params against the catalog entry. Throws
// ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);

// Throws std::ios_base::failure when the file cannot be read, ConfigError
// when it is not valid JSON or fails validation.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace calab::lab
