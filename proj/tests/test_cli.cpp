#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kLab = CALAB_LAB_EXE;
const fs::path kConfigs = CALAB_CONFIG_DIR;

int run(const std::string& args, const fs::path& stdout_file = "/dev/null") {
  const std::string cmd = "\"" + kLab + "\" " + args + " > \"" + stdout_file.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("calab_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

json without_wall_time(json m) {
  m.erase("wall_time_s");
  return m;
}

}  // namespace

TEST_CASE("list is stable") {
  const auto d = scratch("list");
  CHECK(run("list", d / "a.txt") == 0);
  CHECK(run("list", d / "b.txt") == 0);
  const auto a = slurp(d / "a.txt");
  CHECK(a == slurp(d / "b.txt"));
  CHECK(a.find("packing \xE2\x80\x94 Lemma L-comb") != std::string::npos);
  CHECK(a.find("spin-check \xE2\x80\x94 Lemma L-isometric, Example E-CAR") != std::string::npos);
  fs::remove_all(d);
}

TEST_CASE("reruns reproduce outputs") {
  for (const char* name : {"subshift_golden", "perm_shift", "packing"}) {
    CAPTURE(name);
    const auto d = scratch(std::string("rerun_") + name);
    const auto cfg = (kConfigs / (std::string(name) + ".json")).string();
    REQUIRE(run("run \"" + cfg + "\" --quiet --out \"" + (d / "a").string() + "\"") == 0);
    REQUIRE(run("run \"" + cfg + "\" --quiet --threads 4 --out \"" + (d / "b").string() + "\"") == 0);
    const auto ma = json::parse(slurp(d / "a" / "manifest.json"));
    const auto mb = json::parse(slurp(d / "b" / "manifest.json"));
    CHECK(without_wall_time(ma) == without_wall_time(mb));
    for (const auto& e : fs::directory_iterator(d / "a"))
      if (e.path().extension() == ".csv") CHECK(slurp(e.path()) == slurp(d / "b" / e.path().filename()));
    fs::remove_all(d);
  }
}

TEST_CASE("failures map to exit codes and write nothing") {
  const auto d = scratch("errors");
  std::ofstream(d / "malformed.json") << "{\"experiment\": \"packing\", ";
  std::ofstream(d / "unknown.json") << R"({"experiment": "packing", "params": {"m": [2], "n": [6], "delta": [0.1]}, "x": 1})";
  std::ofstream(d / "guard.json") << R"({"experiment": "packing", "params": {"m": [2], "n": [21], "delta": [0.1]}})";

  CHECK(run("run \"" + (d / "malformed.json").string() + "\" --out \"" + (d / "o1").string() + "\"") == 2);
  CHECK_FALSE(fs::exists(d / "o1"));
  CHECK(run("run \"" + (d / "unknown.json").string() + "\" --out \"" + (d / "o2").string() + "\"") == 2);
  CHECK_FALSE(fs::exists(d / "o2"));
  CHECK(run("validate \"" + (d / "unknown.json").string() + "\"") == 2);
  CHECK(run("run \"" + (d / "guard.json").string() + "\" --out \"" + (d / "o3").string() + "\"") == 3);
  CHECK_FALSE(fs::exists(d / "o3"));
  CHECK(run("run \"" + (d / "absent.json").string() + "\" --out \"" + (d / "o4").string() + "\"") == 4);
  CHECK_FALSE(fs::exists(d / "o4"));

  CHECK(run("validate \"" + (kConfigs / "packing.json").string() + "\" --quiet") == 0);
  CHECK(run("frobnicate") == 2);
  CHECK(run("list --threads 0") == 2);
  fs::remove_all(d);
}

TEST_CASE("error report on stderr is structured json") {
  const auto d = scratch("report");
  std::ofstream(d / "guard.json") << R"({"experiment": "packing", "params": {"m": [2], "n": [21], "delta": [0.1]}})";
  const std::string cmd = "\"" + kLab + "\" run \"" + (d / "guard.json").string() + "\" --out \"" +
                          (d / "o").string() + "\" 2> \"" + (d / "err.txt").string() + "\"";
  (void)std::system(cmd.c_str());
  const auto report = json::parse(slurp(d / "err.txt"));
  CHECK(report.at("exit_code") == 3);
  CHECK(report.at("error").contains("message"));
  fs::remove_all(d);
}
