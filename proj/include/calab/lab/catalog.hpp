#pragma once

#include <string>
#include <vector>

namespace calab::lab {

enum class ParamType { Number, Integer, Bool, String, NumberList, IntegerList, Object };

const char* to_string(ParamType t);

struct ParamDoc {
  std::string name;
  ParamType type = ParamType::Number;
  bool required = false;
  std::string doc;
};

struct InputDoc {
  std::string name;
  std::string doc;
};

struct ExperimentInfo {
  std::string kind;
  std::string exercises;  // the result each experiment checks
  std::string summary;
  std::vector<InputDoc> inputs;  // all required
  std::vector<ParamDoc> params;
};

// Sorted by kind.
const std::vector<ExperimentInfo>& catalog();

// nullptr for an unknown kind.
const ExperimentInfo* find_experiment(const std::string& kind);

// Human-readable listing; the first line of each entry is "<kind> <U+2014> <exercises>".
std::string format_catalog();

}  // namespace calab::lab
