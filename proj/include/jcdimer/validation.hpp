#pragma once

// Self-check battery shared by `jcdimer validate` and the acceptance suite.
// Every check pairs two independent routes to the same quantity.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jcdimer/model.hpp"

namespace jcdimer {

using EffectiveBuilder = std::function<SymMatrix(const ModelParams&, const EffectiveBasis&)>;

struct ValidationOptions {
  int random_draws = 20;
  std::uint64_t seed = 20110501;
  // Replaceable so a negative control can feed a corrupted Hamiltonian.
  EffectiveBuilder effective_builder = build_effective_hamiltonian;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  double max_error = 0.0;
  double tolerance = 0.0;
  int points = 0;
  std::string detail;  // worst point when failed, or why points were skipped
};

// Draw within |delta| <= 10, 0 <= J <= 10, 0 <= A <= 0.2 (units of g), keeping
// g, omega_c and n from `base`.
std::vector<ModelParams> random_parameter_points(const ModelParams& base, int count, std::uint64_t seed);

std::vector<CheckResult> run_validation(const ModelParams& base, const ValidationOptions& options = {});

// Corrupts one off-diagonal element; negative control for the isometry check.
SymMatrix corrupted_effective_hamiltonian(const ModelParams& params, const EffectiveBasis& basis);

}  // namespace jcdimer
