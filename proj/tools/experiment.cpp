#include "experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "probrob/error.hpp"
#include "probrob/lti.hpp"
#include "probrob/xform.hpp"

namespace probrob::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys{"system",  "uncertainty", "grid",   "samples",
                                          "algorithm", "emit_bbp",  "seed",   "threads",
                                          "output"};

// Small typed accessors that record problems instead of throwing.
class Reader {
 public:
  explicit Reader(ValidationReport& report) : report_(report) {}

  void error(const std::string& msg) { report_.errors.push_back(msg); }
  void warn(const std::string& msg) { report_.warnings.push_back(msg); }

  const json* object(const json& parent, const char* key, const std::string& where,
                     bool required) {
    if (!parent.contains(key)) {
      if (required) error(where + "." + key + " is required");
      return nullptr;
    }
    const json& v = parent.at(key);
    if (!v.is_object()) {
      error(where + "." + key + " must be an object");
      return nullptr;
    }
    return &v;
  }

  std::optional<double> number(const json& parent, const char* key, const std::string& where) {
    if (!parent.contains(key)) return std::nullopt;
    const json& v = parent.at(key);
    if (!v.is_number()) {
      error(where + "." + key + " must be a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<std::uint64_t> count(const json& parent, const char* key,
                                     const std::string& where) {
    if (!parent.contains(key)) return std::nullopt;
    const json& v = parent.at(key);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0 &&
                                   !v.is_number_unsigned())) {
      error(where + "." + key + " must be a non-negative integer");
      return std::nullopt;
    }
    return v.get<std::uint64_t>();
  }

  std::optional<std::string> text(const json& parent, const char* key, const std::string& where) {
    if (!parent.contains(key)) return std::nullopt;
    const json& v = parent.at(key);
    if (!v.is_string()) {
      error(where + "." + key + " must be a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  std::optional<bool> flag(const json& parent, const char* key, const std::string& where) {
    if (!parent.contains(key)) return std::nullopt;
    const json& v = parent.at(key);
    if (!v.is_boolean()) {
      error(where + "." + key + " must be true or false");
      return std::nullopt;
    }
    return v.get<bool>();
  }

  std::optional<Eigen::MatrixXd> matrix(const json& parent, const char* key,
                                        const std::string& where) {
    if (!parent.contains(key)) {
      error(where + "." + key + " is required");
      return std::nullopt;
    }
    const json& v = parent.at(key);
    const std::string name = where + "." + key;
    if (!v.is_array() || v.empty() || !v.front().is_array() || v.front().empty()) {
      error(name + " must be a non-empty array of rows");
      return std::nullopt;
    }
    const std::size_t cols = v.front().size();
    Eigen::MatrixXd out(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < v.size(); ++r) {
      if (!v[r].is_array() || v[r].size() != cols) {
        error(name + " rows must all have " + std::to_string(cols) + " entries");
        return std::nullopt;
      }
      for (std::size_t c = 0; c < cols; ++c) {
        if (!v[r][c].is_number()) {
          error(name + " entries must be numbers");
          return std::nullopt;
        }
        out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v[r][c].get<double>();
      }
    }
    return out;
  }

  void unknown_keys(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
      if (!allowed.count(key)) warn("unknown key " + where + "." + key + " ignored");
    }
  }

 private:
  ValidationReport& report_;
};

std::optional<PoleRegion> read_region(Reader& rd, const json& system) {
  const json* region = rd.object(system, "region", "system", false);
  if (region == nullptr) return PoleRegion::half_plane(0.0);
  const auto type = rd.text(*region, "type", "system.region").value_or("half_plane");
  if (type == "half_plane") {
    const double sigma = rd.number(*region, "sigma_max", "system.region").value_or(0.0);
    if (!std::isfinite(sigma)) {
      rd.error("system.region.sigma_max must be finite");
      return std::nullopt;
    }
    return PoleRegion::half_plane(sigma);
  }
  if (type == "disk") {
    const double rho = rd.number(*region, "rho_max", "system.region").value_or(1.0);
    if (!(rho > 0.0)) {
      rd.error("system.region.rho_max must be > 0");
      return std::nullopt;
    }
    return PoleRegion::disk(rho);
  }
  rd.error("system.region.type must be half_plane or disk, got '" + type + "'");
  return std::nullopt;
}

/// Shape implied by the system, if it fixes one.
struct SystemShape {
  std::optional<Shape> fixed;
  std::optional<std::size_t> dimension;  // for systems that only fix d
  NormKind default_norm = NormKind::kL2;
};

std::optional<SystemShape> check_system(Reader& rd, const json& system, std::string& type) {
  const auto t = rd.text(system, "type", "system");
  if (!t) {
    rd.error("system.type is required");
    return std::nullopt;
  }
  type = *t;
  SystemShape out;
  if (type == "layered") {
    const auto layers = rd.count(system, "layers", "system").value_or(20);
    const auto i = rd.count(system, "i", "system").value_or(11);
    const auto j = rd.count(system, "j", "system").value_or(19);
    if (!(2 <= i + 1 && i + 1 < j && j < layers)) {
      rd.error("system: layered example needs 2 <= i+1 < j < layers");
    }
    return out;
  }
  if (type == "rank_one") {
    const auto k = rd.count(system, "k", "system");
    if (!k || *k < 1) {
      rd.error("system.k must be an integer >= 1");
      return std::nullopt;
    }
    out.dimension = *k * *k;
    return out;
  }
  if (type == "state_space") {
    const auto a = rd.matrix(system, "A", "system");
    const auto b = rd.matrix(system, "B", "system");
    const auto c = rd.matrix(system, "C", "system");
    (void)read_region(rd, system);
    if (!a || !b || !c) return std::nullopt;
    if (a->rows() != a->cols() || b->rows() != a->rows() || c->cols() != a->cols()) {
      rd.error("system: A must be square, B must have rows(A) rows, C must have cols(A) columns");
      return std::nullopt;
    }
    out.fixed = Shape::real_matrix(static_cast<std::size_t>(b->cols()),
                                   static_cast<std::size_t>(c->rows()));
    return out;
  }
  if (type == "servo_loop") {
    const auto requirement = rd.text(system, "requirement", "system").value_or("stability");
    if (requirement == "step") {
      if (const json* limits = rd.object(system, "limits", "system", false)) {
        for (const char* key : {"rise_max", "settle_max", "overshoot_max"}) {
          const auto v = rd.number(*limits, key, "system.limits");
          if (v && !(*v > 0.0)) rd.error(std::string("system.limits.") + key + " must be > 0");
        }
      }
    } else if (requirement == "stability") {
      (void)read_region(rd, system);
    } else {
      rd.error("system.requirement must be stability or step, got '" + requirement + "'");
    }
    out.dimension = 3;
    out.default_norm = NormKind::kLinf;
    return out;
  }
  rd.error("system.type must be layered, rank_one, state_space or servo_loop, got '" + type +
           "'");
  return std::nullopt;
}

std::optional<Shape> read_shape(Reader& rd, const json* unc, const SystemShape& sys) {
  if (unc == nullptr) {
    if (sys.fixed) return sys.fixed;
    if (sys.dimension) return Shape::vector(*sys.dimension);
    rd.error("uncertainty.dimension is required for this system");
    return std::nullopt;
  }
  const auto kind = rd.text(*unc, "shape", "uncertainty").value_or(
      sys.fixed ? (sys.fixed->kind == ShapeKind::kComplexMatrix ? "complex_matrix" : "real_matrix")
                : "vector");
  Shape shape;
  if (kind == "vector") {
    const auto d = rd.count(*unc, "dimension", "uncertainty");
    if (d) {
      shape = Shape::vector(*d);
    } else if (sys.dimension) {
      shape = Shape::vector(*sys.dimension);
    } else if (sys.fixed) {
      shape = Shape::vector(sys.fixed->rows * sys.fixed->cols);
    } else {
      rd.error("uncertainty.dimension is required");
      return std::nullopt;
    }
  } else if (kind == "real_matrix" || kind == "complex_matrix") {
    const auto rows = rd.count(*unc, "rows", "uncertainty");
    const auto cols = rd.count(*unc, "cols", "uncertainty");
    std::size_t r = sys.fixed ? sys.fixed->rows : 0, c = sys.fixed ? sys.fixed->cols : 0;
    if (rows) r = *rows;
    if (cols) c = *cols;
    shape = kind == "real_matrix" ? Shape::real_matrix(r, c) : Shape::complex_matrix(r, c);
  } else {
    rd.error("uncertainty.shape must be vector, real_matrix or complex_matrix, got '" + kind +
             "'");
    return std::nullopt;
  }
  if (shape.dimension() == 0) {
    rd.error("uncertainty dimension must be >= 1");
    return std::nullopt;
  }
  if (sys.fixed && (shape.kind == ShapeKind::kVector
                        ? shape.rows != sys.fixed->rows * sys.fixed->cols
                        : (shape.rows != sys.fixed->rows || shape.cols != sys.fixed->cols))) {
    rd.error("uncertainty shape does not match the " + std::to_string(sys.fixed->rows) + "x" +
             std::to_string(sys.fixed->cols) + " block required by the system");
  }
  if (sys.dimension && shape.dimension() != *sys.dimension) {
    rd.error("uncertainty dimension " + std::to_string(shape.dimension()) +
             " does not match the " + std::to_string(*sys.dimension) + " parameters of the system");
  }
  return shape;
}

bool writable_location(const fs::path& dir) {
  std::error_code ec;
  fs::path probe = fs::absolute(dir, ec);
  if (ec) return false;
  while (!probe.empty() && !fs::exists(probe, ec)) {
    if (probe == probe.parent_path()) break;
    probe = probe.parent_path();
  }
  if (!fs::is_directory(probe, ec)) return false;
  const auto perms = fs::status(probe, ec).permissions();
  return !ec && (perms & (fs::perms::owner_write | fs::perms::group_write |
                          fs::perms::others_write)) != fs::perms::none;
}

}  // namespace

ValidationReport validate(const json& doc) {
  ValidationReport report;
  Reader rd(report);
  if (!doc.is_object()) {
    rd.error("config must be a JSON object");
    return report;
  }
  rd.unknown_keys(doc, kTopLevelKeys, "config");
  ExperimentConfig cfg;

  // System.
  const json* system = rd.object(doc, "system", "config", true);
  std::optional<SystemShape> sys;
  if (system != nullptr) {
    sys = check_system(rd, *system, cfg.system_type);
    cfg.system = *system;
  }

  // Uncertainty.
  const json* unc = rd.object(doc, "uncertainty", "config", false);
  if (sys) {
    if (auto shape = read_shape(rd, unc, *sys)) cfg.shape = *shape;
    cfg.norm = sys->default_norm;
  }
  if (unc != nullptr) {
    if (const auto norm_name = rd.text(*unc, "norm", "uncertainty")) {
      try {
        cfg.norm = parse_norm(*norm_name);
      } catch (const Error& e) {
        rd.error(std::string("uncertainty.norm: ") + e.what());
      }
    }
  }

  // Grid.
  if (const json* grid = rd.object(doc, "grid", "config", true)) {
    try {
      cfg.scheme = parse_scheme(rd.text(*grid, "scheme", "grid").value_or("geometric"));
    } catch (const Error& e) {
      rd.error(std::string("grid.scheme: ") + e.what());
    }
    const auto lambda = rd.number(*grid, "lambda", "grid");
    const auto a = rd.number(*grid, "a", "grid");
    if (!lambda) {
      rd.error("grid.lambda is required");
    } else if (!(*lambda > 1.0) || !std::isfinite(*lambda)) {
      rd.error("grid.lambda must be > 1");
    } else {
      cfg.lambda = *lambda;
    }
    cfg.a = a.value_or(1.0);
    if (!(cfg.a > 0.0) || !std::isfinite(cfg.a)) rd.error("grid.a must be > 0");
    const auto eps = rd.number(*grid, "epsilon", "grid");
    const auto m = rd.count(*grid, "m", "grid");
    if (eps && m) {
      rd.error("grid: give exactly one of epsilon and m");
    } else if (!eps && !m) {
      rd.error("grid: one of epsilon and m is required");
    } else if (m) {
      if (*m < 2) rd.error("grid.m must be >= 2");
      cfg.m = *m;
    } else if (!(*eps > 0.0 && *eps < 1.0)) {
      rd.error("grid.epsilon must lie in (0,1)");
    } else {
      cfg.grid_epsilon = *eps;
      if (cfg.lambda > 1.0) cfg.m = choose_m(cfg.scheme, cfg.lambda, *eps);
    }
  }

  // Sample plan.
  if (const json* samples = rd.object(doc, "samples", "config", true)) {
    const auto eps = rd.number(*samples, "epsilon", "samples");
    const auto delta = rd.number(*samples, "delta", "samples");
    const auto n = rd.count(*samples, "n", "samples");
    const bool has_pair = eps || delta;
    if (has_pair && n) {
      rd.error("samples: give either (epsilon, delta) or n, not both");
    } else if (!has_pair && !n) {
      rd.error("samples: one of (epsilon, delta) or n is required");
    } else if (n) {
      if (*n < 1) rd.error("samples.n must be >= 1");
      cfg.n = *n;
    } else if (!eps || !delta) {
      rd.error("samples: epsilon and delta must be given together");
    } else if (!(*eps > 0.0 && *eps < 1.0) || !(*delta > 0.0 && *delta < 1.0)) {
      rd.error("samples.epsilon and samples.delta must lie in (0,1)");
    } else {
      cfg.sample_epsilon = *eps;
      cfg.sample_delta = *delta;
      cfg.n = chernoff_n(*eps, *delta);
    }
  }

  // Scalars.
  if (const auto algo = rd.text(doc, "algorithm", "config")) {
    if (*algo == "ssra") {
      cfg.algorithm = Algorithm::kSsra;
    } else if (*algo == "hsra") {
      cfg.algorithm = Algorithm::kHsra;
    } else {
      rd.error("algorithm must be ssra or hsra, got '" + *algo + "'");
    }
  }
  cfg.emit_bbp = rd.flag(doc, "emit_bbp", "config").value_or(false);
  if (const auto seed = rd.count(doc, "seed", "config")) {
    cfg.seed = *seed;
  } else if (!doc.contains("seed")) {
    rd.warn("seed missing; using default seed 1");
  }
  if (const auto threads = rd.count(doc, "threads", "config")) cfg.threads = *threads;
  if (cfg.emit_bbp && cfg.lambda > 1.0 && cfg.lambda < 1000.0) {
    rd.warn("emit_bbp treats the curve as constant below a/lambda; choose lambda >= 1000 for a "
            "faithful classical-measure head");
  }

  // Output.
  if (const json* output = rd.object(doc, "output", "config", false)) {
    rd.unknown_keys(*output, {"dir", "csv", "json"}, "output");
    cfg.out_dir = rd.text(*output, "dir", "output").value_or(cfg.out_dir);
    cfg.csv_name = rd.text(*output, "csv", "output").value_or(cfg.csv_name);
    cfg.json_name = rd.text(*output, "json", "output").value_or(cfg.json_name);
  }
  if (!writable_location(cfg.out_dir)) {
    rd.error("output directory '" + cfg.out_dir + "' is not writable");
  }
  if (cfg.csv_name.empty() || cfg.json_name.empty() || cfg.csv_name == cfg.json_name) {
    rd.error("output.csv and output.json must be distinct non-empty file names");
  }

  if (report.ok()) report.config = std::move(cfg);
  return report;
}

ValidationReport validate_file(const std::string& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) {
    ValidationReport report;
    report.errors.push_back("cannot read config file '" + path + "'");
    return report;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    ValidationReport report;
    report.errors.push_back("config is not valid JSON: " + std::string(e.what()));
    return report;
  }
  if (doc.is_object()) {
    if (overrides.seed) doc["seed"] = *overrides.seed;
    if (overrides.algorithm) doc["algorithm"] = *overrides.algorithm;
    if (overrides.emit_bbp) doc["emit_bbp"] = true;
    if (overrides.threads) doc["threads"] = *overrides.threads;
    if (overrides.out_dir) doc["output"]["dir"] = *overrides.out_dir;
  }
  return validate(doc);
}

namespace {

Eigen::MatrixXd to_matrix(const json& rows) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].get<double>();
  return out;
}

PoleRegion region_of(const json& system) {
  if (!system.contains("region")) return PoleRegion::half_plane(0.0);
  const json& r = system.at("region");
  if (r.value("type", std::string("half_plane")) == "disk") {
    return PoleRegion::disk(r.value("rho_max", 1.0));
  }
  return PoleRegion::half_plane(r.value("sigma_max", 0.0));
}

}  // namespace

Indicator build_indicator(const ExperimentConfig& config) {
  const json& s = config.system;
  if (config.system_type == "layered") {
    return layered_oracle(s.value("layers", 20u), s.value("i", 11u), s.value("j", 19u),
                          config.norm);
  }
  if (config.system_type == "rank_one") return rank_one_oracle(s.at("k").get<std::size_t>());
  if (config.system_type == "state_space") {
    const LtiPlant plant(to_matrix(s.at("A")), to_matrix(s.at("B")), to_matrix(s.at("C")));
    return region_stability(plant, region_of(s));
  }
  if (config.system_type == "servo_loop") {
    if (s.value("requirement", std::string("stability")) == "step") {
      StepLimits limits{0.25, 3.5, 0.7};
      if (s.contains("limits")) {
        const json& l = s.at("limits");
        limits.rise_max = l.value("rise_max", limits.rise_max);
        limits.settle_max = l.value("settle_max", limits.settle_max);
        limits.overshoot_max = l.value("overshoot_max", limits.overshoot_max);
      }
      return step_spec(servo_loop(), limits);
    }
    return loop_stability(servo_loop(), region_of(s));
  }
  raise(ErrorKind::kInvalidArgument, "unknown system type '" + config.system_type + "'");
}

RunResult run_experiment(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const RadiusGrid grid = build_grid(config.scheme, config.lambda, config.a, config.m);
  const SamplingProblem problem{config.shape, config.norm, build_indicator(config)};
  const ReuseOptions options{config.threads};
  ReuseResult result = config.algorithm == Algorithm::kSsra
                           ? ssra(config.n, grid, problem, config.seed, options)
                           : hsra(config.n, grid, problem, config.seed, options);
  RobustnessCurve curve = estimate_curve(result.counts, config.n, grid);

  RunResult out{std::move(curve), std::nullopt, std::nullopt, std::move(result.report), 0.0};
  if (config.emit_bbp) {
    const CurveGrid scriptp{grid.radii(), out.curve.values(), config.shape.dimension()};
    auto bbp = bbp_from_scriptp(scriptp).values;
    out.bbp_inf = running_infimum(bbp);
    out.bbp = std::move(bbp);
  }
  out.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

std::string render_csv(const RunResult& result) {
  std::string out = "index,r,p_script_hat,p_script_inf,p_bb_hat,p_bb_inf\n";
  const auto& radii = result.curve.grid().radii();
  const auto& values = result.curve.values();
  const auto& inf = result.curve.inf_values();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',' + fmt9(radii[i]) + ',' + fmt9(values[i]) + ',' + fmt9(inf[i]) + ',';
    if (result.bbp) out += fmt9((*result.bbp)[i]) + ',' + fmt9((*result.bbp_inf)[i]);
    else out += ',';
    out += '\n';
  }
  return out;
}

json render_report(const ExperimentConfig& config, const RunResult& result) {
  const ComplexityReport& r = result.report;
  json j;
  j["seed"] = config.seed;
  j["N"] = r.n;
  j["m"] = r.m;
  j["lambda"] = config.lambda;
  j["a"] = config.a;
  j["total_simulations"] = r.total_simulations;
  j["measured_meq"] = r.measured_meq;
  j["predicted_meq"] = r.predicted_meq;
  j["meq_bound"] = 1.0 + std::log(config.lambda);
  j["simulations_stddev"] = r.simulations_stddev;
  j["mean_leaf_rows"] = r.mean_leaf_rows;
  j["merge_row_visits"] = r.merge_row_visits;
  j["decomposition"] = r.decomposition;
  j["predicted_speedup"] = r.predicted_speedup;
  j["algorithm"] = config.algorithm == Algorithm::kSsra ? "ssra" : "hsra";
  j["scheme"] = std::string(to_string(config.scheme));
  j["dimension"] = config.shape.dimension();
  j["norm"] = std::string(to_string(config.norm));
  j["system"] = config.system;
  if (config.grid_epsilon) j["grid_epsilon"] = *config.grid_epsilon;
  if (config.sample_epsilon) {
    j["sample_epsilon"] = *config.sample_epsilon;
    j["sample_delta"] = *config.sample_delta;
  }
  j["emit_bbp"] = config.emit_bbp;
  j["wall_time_s"] = result.wall_time_s;
  return j;
}

namespace {

void print_report(const ValidationReport& report, std::ostream& err) {
  for (const auto& w : report.warnings) err << "warning: " << w << '\n';
  for (const auto& e : report.errors) err << "error: " << e << '\n';
}

bool write_file(const fs::path& path, const std::string& content, std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int run_command(const std::string& config_path, const Overrides& overrides, std::ostream& out,
                std::ostream& err) {
  const ValidationReport report = validate_file(config_path, overrides);
  print_report(report, err);
  if (!report.ok()) return kExitConfig;
  const ExperimentConfig& config = *report.config;

  std::optional<RunResult> result;
  try {
    result = run_experiment(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) {
    err << "error: cannot create output directory '" << config.out_dir << "': " << ec.message()
        << '\n';
    return kExitConfig;
  }
  const fs::path csv = fs::path(config.out_dir) / config.csv_name;
  const fs::path js = fs::path(config.out_dir) / config.json_name;
  if (!write_file(csv, render_csv(*result), err)) return kExitConfig;
  if (!write_file(js, render_report(config, *result).dump(2) + "\n", err)) return kExitConfig;
  out << "wrote " << csv.string() << " and " << js.string() << " (N=" << config.n
      << ", m=" << config.m << ", measured m_eq=" << result->report.measured_meq << ")\n";
  return kExitOk;
}

int validate_command(const std::string& config_path, std::ostream& out, std::ostream& err) {
  const ValidationReport report = validate_file(config_path);
  print_report(report, err);
  if (!report.ok()) {
    out << report.errors.size() << " error(s)\n";
    return kExitConfig;
  }
  const ExperimentConfig& c = *report.config;
  out << "ok: system=" << c.system_type << " d=" << c.shape.dimension()
      << " norm=" << to_string(c.norm) << " grid=" << to_string(c.scheme) << "(lambda=" << c.lambda
      << ", a=" << c.a << ", m=" << c.m << ") N=" << c.n
      << " algorithm=" << (c.algorithm == Algorithm::kSsra ? "ssra" : "hsra") << '\n';
  return kExitOk;
}

}  // namespace probrob::cli
