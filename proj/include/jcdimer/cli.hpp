#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jcdimer/phase_sweep.hpp"

namespace jcdimer {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string subcommand;
  ModelParams params = ModelParams::from_detuning(0.0, 0.1, 0.1);
  ModelKind model = ModelKind::effective;
  SweepSpec sweep;
  // Explicit --resolution; otherwise 81 for sweeps and 201 for gap curves.
  std::optional<int> resolution;
  std::string out_path;  // empty: stdout
  std::optional<OutputFormat> format;
  std::string boundary_path;
  std::uint64_t seed = 20110501;
  int draws = 20;
  bool inject_fault = false;

  // Throws ContractViolation for non-finite physics values or empty ranges.
  void validate() const;
};

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

int cmd_ground(const RunConfig& config, std::ostream& out);
int cmd_sweep(const RunConfig& config, std::ostream& out);
int cmd_gaps(const RunConfig& config, std::ostream& out);
int cmd_validate(const RunConfig& config, std::ostream& out);

// Full entry point: `args` excludes the program name. Flags override values
// from --config, which override built-in defaults.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jcdimer
