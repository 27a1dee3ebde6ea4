#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "probrob/gridspec.hpp"
#include "probrob/indicators.hpp"
#include "probrob/reuse.hpp"
#include "probrob/uncsample.hpp"

namespace probrob::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

enum class Algorithm { kSsra, kHsra };

struct ExperimentConfig {
  nlohmann::json system;  // validated system block, kept for the report
  std::string system_type;
  Shape shape;
  NormKind norm = NormKind::kL2;

  GridScheme scheme = GridScheme::kGeometric;
  double lambda = 0.0;
  double a = 0.0;
  std::size_t m = 0;                 // resolved grid size
  std::optional<double> grid_epsilon;

  std::size_t n = 0;                 // resolved sample size
  std::optional<double> sample_epsilon;
  std::optional<double> sample_delta;

  Algorithm algorithm = Algorithm::kHsra;
  bool emit_bbp = false;
  std::uint64_t seed = 1;
  std::size_t threads = 1;

  std::string out_dir = ".";
  std::string csv_name = "curve.csv";
  std::string json_name = "report.json";
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  std::optional<ExperimentConfig> config;  // set when errors is empty

  bool ok() const noexcept { return errors.empty(); }
};

/// Command-line values that replace the corresponding config entries.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> algorithm;
  bool emit_bbp = false;
  std::optional<std::string> out_dir;
  std::optional<std::size_t> threads;
};

/// Checks a parsed config document and resolves defaults.  Never throws;
/// every problem becomes an entry of the report.
ValidationReport validate(const nlohmann::json& doc);

/// Reads and validates a config file; unreadable or malformed files are
/// reported as errors.
ValidationReport validate_file(const std::string& path, const Overrides& overrides = {});

/// Builds the robustness requirement described by the config.
Indicator build_indicator(const ExperimentConfig& config);

struct RunResult {
  RobustnessCurve curve;
  std::optional<std::vector<double>> bbp;
  std::optional<std::vector<double>> bbp_inf;
  ComplexityReport report;
  double wall_time_s = 0.0;
};

/// Runs the experiment in memory.  Library errors propagate as probrob::Error.
RunResult run_experiment(const ExperimentConfig& config);

std::string render_csv(const RunResult& result);
nlohmann::json render_report(const ExperimentConfig& config, const RunResult& result);

/// The two subcommands; return the process exit code and print diagnostics
/// to err.
int run_command(const std::string& config_path, const Overrides& overrides, std::ostream& out,
                std::ostream& err);
int validate_command(const std::string& config_path, std::ostream& out, std::ostream& err);

}  // namespace probrob::cli
