#include "jcdimer/phase_sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "jcdimer/errors.hpp"

namespace jcdimer {

std::string_view to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::atomic_insulator: return "atomic-insulator";
    case PhaseLabel::polaritonic_insulator: return "polaritonic-insulator";
    case PhaseLabel::polaritonic_superfluid: return "polaritonic-superfluid";
    case PhaseLabel::photonic_superfluid: return "photonic-superfluid";
  }
  return "unknown";
}

PhaseLabel phase_label_from_string(std::string_view text) {
  for (auto l : {PhaseLabel::atomic_insulator, PhaseLabel::polaritonic_insulator,
                 PhaseLabel::polaritonic_superfluid, PhaseLabel::photonic_superfluid})
    if (to_string(l) == text) return l;
  throw ContractViolation("unknown phase label '" + std::string(text) + "'");
}

PhaseLabel classify(double var_N1, double var_NA1, const ClassificationThresholds& thresholds) {
  if (!(var_N1 >= 0.0) || !(var_NA1 >= 0.0)) throw ContractViolation("classify: variances must be non-negative");
  if (!(thresholds.superfluid_eps > 0.0) || !(thresholds.polariton_eps > 0.0))
    throw ContractViolation("classify: thresholds must be positive");
  const bool superfluid = var_N1 > thresholds.superfluid_eps;
  const bool polaritonic = var_NA1 > thresholds.polariton_eps;
  if (superfluid) return polaritonic ? PhaseLabel::polaritonic_superfluid : PhaseLabel::photonic_superfluid;
  return polaritonic ? PhaseLabel::polaritonic_insulator : PhaseLabel::atomic_insulator;
}

void SweepSpec::validate() const {
  if (resolution < 2) throw ContractViolation("sweep resolution must be >= 2");
  if (!(delta_max > delta_min) || !(j_max > j_min)) throw ContractViolation("sweep ranges must have max > min");
  if (!(thresholds.superfluid_eps > 0.0) || !(thresholds.polariton_eps > 0.0))
    throw ContractViolation("classification thresholds must be positive");
  ModelParams::from_detuning(delta_min, j_min, A, g, omega_c, n_excitations).validate();
}

namespace {

std::vector<double> axis(double lo, double hi, int n) {
  std::vector<double> out(n);
  const double step = (hi - lo) / (n - 1);
  for (int k = 0; k < n; ++k) out[k] = lo + k * step;
  out.back() = hi;
  return out;
}

}  // namespace

std::vector<double> SweepSpec::delta_axis() const { return axis(delta_min, delta_max, resolution); }
std::vector<double> SweepSpec::j_axis() const { return axis(j_min, j_max, resolution); }

SweepError::SweepError(double d, double j, const std::string& what)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "sweep failed at delta=" << d << ", J=" << j << ": " << what;
        return msg.str();
      }()),
      delta(d),
      J(j) {}

PhaseCell evaluate_cell(const SweepSpec& spec, double delta, double J) {
  try {
    const auto params = ModelParams::from_detuning(delta, J, spec.A, spec.g, spec.omega_c, spec.n_excitations);
    const auto report = ground_state_report(params, spec.model);
    PhaseCell cell;
    cell.delta = delta;
    cell.J = J;
    cell.var_N1 = report.order.var_N1;
    cell.var_NA1 = report.order.var_NA1;
    cell.product = report.order.product;
    cell.phase = classify(cell.var_N1, cell.var_NA1, spec.thresholds);
    return cell;
  } catch (const std::exception& e) {
    throw SweepError(delta, J, e.what());
  }
}

PhaseGrid sweep(const SweepSpec& spec) {
  spec.validate();
  PhaseGrid grid;
  grid.deltas = spec.delta_axis();
  grid.js = spec.j_axis();
  const std::size_t n = grid.deltas.size();
  grid.cells.resize(n * grid.js.size());

  auto run_rows = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i)
      for (std::size_t k = 0; k < grid.js.size(); ++k)
        grid.cells[i * grid.js.size() + k] = evaluate_cell(spec, grid.deltas[i], grid.js[k]);
  };

  const std::size_t workers = std::clamp<std::size_t>(spec.threads, 1, n);
  if (workers == 1) {
    run_rows(0, n);
    return grid;
  }

  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(n, first + chunk);
      pool.emplace_back([&, w, first, last] {
        try {
          run_rows(first, last);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return grid;
}

std::vector<BoundaryPoint> boundary_trace(const PhaseGrid& grid) {
  std::vector<BoundaryPoint> out;
  out.reserve(grid.deltas.size());
  for (std::size_t i = 0; i < grid.deltas.size(); ++i) {
    BoundaryPoint b{grid.deltas[i], std::nullopt};
    for (std::size_t k = 1; k < grid.js.size(); ++k) {
      if (!is_superfluid(grid.at(i, k - 1).phase) && is_superfluid(grid.at(i, k).phase)) {
        b.j_star = grid.js[k];
        break;
      }
    }
    out.push_back(b);
  }
  return out;
}

std::vector<BoundaryPoint> boundary_trace(const SweepSpec& spec) { return boundary_trace(sweep(spec)); }

}  // namespace jcdimer
