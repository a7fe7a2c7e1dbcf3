#include <chrono>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "calab/lab/catalog.hpp"
#include "calab/lab/config.hpp"
#include "calab/lab/runner.hpp"
#include "calab/parallel.hpp"

namespace {

using calab::lab::ExitCode;

int fail(const std::exception& e) {
  std::cerr << calab::lab::error_report(e).dump() << "\n";
  return static_cast<int>(calab::lab::exit_code_for(e));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contractive-approximation entropy laboratory"};
  app.set_version_flag("--version", std::string(calab::lab::kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_dir;
  unsigned threads = 1;
  bool quiet = false;
  app.add_option("--out", out_dir, "output directory (overrides the config)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--quiet", quiet, "suppress progress output");

  std::string config_path;
  auto* run = app.add_subcommand("run", "run one experiment config");
  run->add_option("config", config_path, "config JSON")->required();
  auto* list = app.add_subcommand("list", "list experiment kinds and their parameters");
  auto* validate = app.add_subcommand("validate", "check a config without running it");
  validate->add_option("config", config_path, "config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::Schema);
  }
  calab::set_thread_count(threads);

  if (*list) {
    std::cout << calab::lab::format_catalog();
    return 0;
  }

  try {
    const auto config = calab::lab::load_config(config_path);
    if (*validate) {
      if (!quiet) std::cout << "ok: " << config.experiment << "\n";
      return 0;
    }
    std::filesystem::path dir;
    if (!out_dir.empty())
      dir = out_dir;
    else if (config.output)
      dir = *config.output;
    else
      dir = std::filesystem::path("lab-out") / std::filesystem::path(config_path).stem();

    const auto t0 = std::chrono::steady_clock::now();
    const auto result = calab::lab::run_experiment(config);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    calab::lab::write_outputs(dir, config, result, wall);
    if (!quiet) std::cout << (dir / "manifest.json").string() << "\n";
    return 0;
  } catch (const std::exception& e) {
    return fail(e);
  }
}
