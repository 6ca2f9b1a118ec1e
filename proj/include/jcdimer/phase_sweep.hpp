#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jcdimer/observables.hpp"

namespace jcdimer {

enum class PhaseLabel { atomic_insulator, polaritonic_insulator, polaritonic_superfluid, photonic_superfluid };

std::string_view to_string(PhaseLabel label);
// Throws ContractViolation on an unknown label.
PhaseLabel phase_label_from_string(std::string_view text);

[[nodiscard]] constexpr bool is_superfluid(PhaseLabel label) {
  return label == PhaseLabel::polaritonic_superfluid || label == PhaseLabel::photonic_superfluid;
}

struct ClassificationThresholds {
  double superfluid_eps = 0.05;  // on var_N1
  double polariton_eps = 0.05;   // on var_NA1
};

PhaseLabel classify(double var_N1, double var_NA1, const ClassificationThresholds& thresholds = {});

struct SweepSpec {
  double delta_min = -10.0;
  double delta_max = 10.0;
  double j_min = 0.0;
  double j_max = 10.0;
  int resolution = 81;
  double A = 0.1;
  double g = 1.0;
  double omega_c = 0.0;
  int n_excitations = 2;
  ModelKind model = ModelKind::effective;
  ClassificationThresholds thresholds;
  unsigned threads = 1;

  void validate() const;
  [[nodiscard]] std::vector<double> delta_axis() const;
  [[nodiscard]] std::vector<double> j_axis() const;
};

struct PhaseCell {
  double delta = 0.0;
  double J = 0.0;
  double var_N1 = 0.0;
  double var_NA1 = 0.0;
  double product = 0.0;
  PhaseLabel phase = PhaseLabel::atomic_insulator;
};

// resolution x resolution cells stored delta-major: cells[i * resolution + k]
// holds (deltas[i], js[k]).
struct PhaseGrid {
  std::vector<double> deltas;
  std::vector<double> js;
  std::vector<PhaseCell> cells;

  [[nodiscard]] std::size_t resolution() const { return deltas.size(); }
  [[nodiscard]] const PhaseCell& at(std::size_t delta_index, std::size_t j_index) const {
    return cells[delta_index * js.size() + j_index];
  }
};

class SweepError : public std::runtime_error {
 public:
  SweepError(double delta, double J, const std::string& what);
  double delta;
  double J;
};

PhaseCell evaluate_cell(const SweepSpec& spec, double delta, double J);

// Cells are independent; with spec.threads > 1 rows are split across threads and
// the result is identical to the sequential one.
PhaseGrid sweep(const SweepSpec& spec);

struct BoundaryPoint {
  double delta = 0.0;
  std::optional<double> j_star;  // empty: no insulator-to-superfluid transition in the column
};

// For each delta column, the first J at which the label switches from an
// insulator to a superfluid phase.
std::vector<BoundaryPoint> boundary_trace(const PhaseGrid& grid);
std::vector<BoundaryPoint> boundary_trace(const SweepSpec& spec);

}  // namespace jcdimer
