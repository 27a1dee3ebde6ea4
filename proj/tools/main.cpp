#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "experiment.hpp"

int main(int argc, char** argv) {
  namespace cli = probrob::cli;

  CLI::App app{"Probabilistic robustness curves by radial sampling with reuse"};
  app.require_subcommand(1);

  std::string run_config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algo;
  bool emit_bbp = false;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> threads;

  auto* run = app.add_subcommand("run", "run an experiment and write the curve CSV and JSON report");
  run->add_option("--config", run_config, "experiment config (JSON)")->required();
  run->add_option("--seed", seed, "override the config seed");
  run->add_option("--algo", algo, "ssra or hsra")->check(CLI::IsMember({"ssra", "hsra"}));
  run->add_flag("--emit-bbp", emit_bbp, "also write the classical-measure curve");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--threads", threads, "worker threads, 0 for all cores");

  std::string validate_config;
  auto* validate = app.add_subcommand("validate", "check a config without running it");
  validate->add_option("--config", validate_config, "experiment config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfig;
  }

  if (*validate) return cli::validate_command(validate_config, std::cout, std::cerr);
  const cli::Overrides overrides{seed, algo, emit_bbp, out_dir, threads};
  return cli::run_command(run_config, overrides, std::cout, std::cerr);
}
