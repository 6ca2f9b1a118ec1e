#include "jcdimer/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jcdimer/errors.hpp"

namespace jcdimer {

double mixing_angle(int n, const ModelParams& params) {
  if (n < 1) throw ContractViolation("mixing_angle: n must be >= 1");
  return std::atan2(2.0 * std::numbers::sqrt2 * params.g * std::sqrt(static_cast<double>(n)),
                    params.detuning_plus_dipole());
}

DressedState dressed_state(int n, Branch branch, const ModelParams& params) {
  DressedState d;
  d.n = n;
  d.branch = branch;
  d.mixing_angle = mixing_angle(n, params);
  const double s = std::sin(d.mixing_angle / 2.0);
  const double c = std::cos(d.mixing_angle / 2.0);
  if (branch == Branch::minus) {
    d.excited_amplitude = s;
    d.ground_amplitude = -c;
  } else {
    d.excited_amplitude = c;
    d.ground_amplitude = s;
  }
  return d;
}

double dressed_energy(int n, Branch branch, const ModelParams& params) {
  if (n < 0) throw ContractViolation("dressed_energy: n must be >= 0");
  if (n == 0) return 0.0;
  const double x = params.detuning_plus_dipole();
  const double root = std::sqrt(x * x + 8.0 * params.g * params.g * n);
  const double sign = branch == Branch::minus ? -1.0 : 1.0;
  return n * params.omega_c + x / 2.0 + sign * root / 2.0;
}

GapSet energy_gaps(const ModelParams& params) {
  const double x = params.detuning_plus_dipole();
  const double g2 = params.g * params.g;
  const double r8 = std::sqrt(x * x + 8.0 * g2);
  const double r16 = std::sqrt(x * x + 16.0 * g2);
  return {r8 - 0.5 * (r16 + x), 0.5 * (x + r16), 0.5 * (r16 - x), r8 - 0.5 * (r16 - x)};
}

std::vector<GapRow> gap_curve(double j_min, double j_max, int resolution, const ModelParams& params) {
  if (resolution < 2) throw ContractViolation("gap_curve: resolution must be >= 2");
  if (!(j_max > j_min)) throw ContractViolation("gap_curve: empty J range");
  std::vector<GapRow> rows;
  rows.reserve(resolution);
  ModelParams p = params;
  const double step = (j_max - j_min) / (resolution - 1);
  for (int k = 0; k < resolution; ++k) {
    p.J = k + 1 == resolution ? j_max : j_min + k * step;
    rows.push_back({p.J, energy_gaps(p)});
  }
  return rows;
}

std::vector<double> decoupled_sector_energies(const ModelParams& params) {
  const int total = params.n_excitations;
  // Per-cavity levels at excitation k: E^0 once, otherwise the two branches.
  auto levels = [&](int k) -> std::vector<double> {
    if (k == 0) return {0.0};
    return {dressed_energy(k, Branch::minus, params), dressed_energy(k, Branch::plus, params)};
  };
  std::vector<double> out;
  for (int k = 0; k <= total; ++k)
    for (double e1 : levels(k))
      for (double e2 : levels(total - k)) out.push_back(e1 + e2);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jcdimer
