#include "jcdimer/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jcdimer/errors.hpp"
#include "jcdimer/serialization.hpp"
#include "jcdimer/validation.hpp"

namespace jcdimer {

namespace {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw OutputError("cannot open '" + config.out_path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw OutputError("write to '" + config.out_path + "' failed");
}

SweepSpec effective_sweep_spec(const RunConfig& config) {
  SweepSpec spec = config.sweep;
  spec.resolution = config.resolution.value_or(81);
  spec.A = config.params.A;
  spec.g = config.params.g;
  spec.omega_c = config.params.omega_c;
  spec.n_excitations = config.params.n_excitations;
  spec.model = config.model;
  return spec;
}

}  // namespace

void RunConfig::validate() const {
  params.validate();
  for (double v : {sweep.delta_min, sweep.delta_max, sweep.j_min, sweep.j_max, sweep.thresholds.superfluid_eps,
                   sweep.thresholds.polariton_eps})
    if (!std::isfinite(v)) throw ContractViolation("all physics values must be finite");
  if (resolution && *resolution < 2) throw ContractViolation("--resolution must be >= 2");
  if (!(sweep.delta_max > sweep.delta_min)) throw ContractViolation("--delta-range must satisfy max > min");
  if (!(sweep.j_max > sweep.j_min)) throw ContractViolation("--j-range must satisfy max > min");
  if (!(sweep.thresholds.superfluid_eps > 0.0) || !(sweep.thresholds.polariton_eps > 0.0))
    throw ContractViolation("--sf-eps and --pol-eps must be positive");
  if (draws < 0) throw ContractViolation("--draws must be non-negative");
}

int cmd_ground(const RunConfig& config, std::ostream& out) {
  const auto report = ground_state_report(config.params, config.model);
  std::ostringstream text;
  if (config.format.value_or(OutputFormat::json) == OutputFormat::csv)
    write_report_csv(text, report);
  else
    write_report_json(text, report);
  emit(config, out, text.str());
  return kExitOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out) {
  const auto spec = effective_sweep_spec(config);
  const auto grid = sweep(spec);
  std::ostringstream text;
  if (config.format.value_or(OutputFormat::csv) == OutputFormat::json)
    write_grid_json(text, grid);
  else
    write_grid_csv(text, grid);
  emit(config, out, text.str());

  if (!config.boundary_path.empty()) {
    RunConfig boundary = config;
    boundary.out_path = config.boundary_path;
    std::ostringstream trace;
    write_boundary_csv(trace, boundary_trace(grid));
    emit(boundary, out, trace.str());
  }
  return kExitOk;
}

int cmd_gaps(const RunConfig& config, std::ostream& out) {
  const auto rows =
      gap_curve(config.sweep.j_min, config.sweep.j_max, config.resolution.value_or(201), config.params);
  std::ostringstream text;
  if (config.format.value_or(OutputFormat::csv) == OutputFormat::json)
    write_gaps_json(text, rows);
  else
    write_gaps_csv(text, rows);
  emit(config, out, text.str());
  return kExitOk;
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
  ValidationOptions options;
  options.random_draws = config.draws;
  options.seed = config.seed;
  if (config.inject_fault) options.effective_builder = corrupted_effective_hamiltonian;

  const auto results = run_validation(config.params, options);
  std::ostringstream text;
  int failures = 0;
  for (const auto& r : results) {
    text << (r.passed ? "PASS " : "FAIL ") << r.name << "  max_error=" << format_number(r.max_error)
         << " tol=" << format_number(r.tolerance) << " points=" << r.points;
    if (!r.detail.empty()) text << "  (" << r.detail << ")";
    text << '\n';
    if (!r.passed) ++failures;
  }
  text << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << '\n';
  emit(config, out, text.str());
  return failures == 0 ? kExitOk : kExitFailure;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  double delta = config.params.delta();
  std::vector<double> delta_range{config.sweep.delta_min, config.sweep.delta_max};
  std::vector<double> j_range{config.sweep.j_min, config.sweep.j_max};
  std::string format;
  int resolution = 0;
  bool full_model = false;
  bool full_j_range = false;

  CLI::App app{"Ground states and phase diagram of two coupled cavities with dipole-coupled atom pairs",
               "jcdimer"};
  app.set_config("--config", "", "key=value configuration file (command-line flags take precedence)");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  app.add_option("--delta", delta, "Atom-field detuning omega_a - omega_c")->capture_default_str();
  app.add_option("--j", config.params.J, "Dipole-dipole coupling J")->capture_default_str();
  app.add_option("--a", config.params.A, "Inter-cavity photon hopping A")->capture_default_str();
  app.add_option("--g", config.params.g, "Atom-field coupling g")->capture_default_str();
  app.add_option("--omega-c", config.params.omega_c, "Cavity frequency")->capture_default_str();
  app.add_option("--n", config.params.n_excitations, "Total excitation number")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--full-model", full_model, "Use both atoms per cavity instead of the effective model");
  app.add_option("--out", config.out_path, "Output file (default: stdout)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--resolution", resolution, "Grid points per axis (sweep: 81, gaps: 201)");
  app.add_option("--delta-range", delta_range, "Detuning sweep range: MIN MAX")->expected(2)->capture_default_str();
  app.add_option("--j-range", j_range, "Dipole coupling range: MIN MAX")->expected(2)->capture_default_str();
  app.add_flag("--full-j-range", full_j_range, "Sweep J over [-10, 10] unless --j-range is given");
  app.add_option("--sf-eps", config.sweep.thresholds.superfluid_eps, "Superfluid cutoff on var_N1")
      ->capture_default_str();
  app.add_option("--pol-eps", config.sweep.thresholds.polariton_eps, "Polaritonic cutoff on var_NA1")
      ->capture_default_str();
  app.add_option("--threads", config.sweep.threads, "Worker threads for sweeps")->capture_default_str();
  app.add_option("--boundary", config.boundary_path, "sweep: also write the insulator/superfluid boundary CSV");
  app.add_option("--seed", config.seed, "validate: seed for random parameter draws")->capture_default_str();
  app.add_option("--draws", config.draws, "validate: number of random parameter draws")->capture_default_str();
  app.add_flag("--inject-fault", config.inject_fault, "validate: corrupt the effective Hamiltonian (negative control)");

  auto add_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  add_command("ground", "Ground-state report at one parameter point");
  add_command("sweep", "Order parameters and phase labels over the (delta, J) plane");
  add_command("gaps", "Analytic level gaps versus J at fixed delta");
  add_command("validate", "Run the internal consistency checks");

  // CLI11 parses a reversed argument vector.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.params.omega_a = config.params.omega_c + delta;
  config.model = full_model ? ModelKind::full : ModelKind::effective;
  if (app.count("--resolution") > 0) config.resolution = resolution;
  if (!format.empty()) config.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (full_j_range && app.count("--j-range") == 0) j_range = {-10.0, 10.0};
  config.sweep.delta_min = delta_range[0];
  config.sweep.delta_max = delta_range[1];
  config.sweep.j_min = j_range[0];
  config.sweep.j_max = j_range[1];
  config.sweep.threads = std::max(1u, config.sweep.threads);

  try {
    config.validate();
  } catch (const ContractViolation& e) {
    err << "jcdimer: " << e.what() << '\n';
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (config.subcommand == "ground") return cmd_ground(config, out);
    if (config.subcommand == "sweep") return cmd_sweep(config, out);
    if (config.subcommand == "gaps") return cmd_gaps(config, out);
    if (config.subcommand == "validate") return cmd_validate(config, out);
  } catch (const std::exception& e) {
    err << "jcdimer: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace jcdimer
