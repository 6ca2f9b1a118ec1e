// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jcdimer/analytics.hpp"
#include "jcdimer/eigensolver.hpp"
#include "jcdimer/model.hpp"
#include "jcdimer/observables.hpp"
#include "jcdimer/phase_sweep.hpp"
#include "jcdimer/serialization.hpp"
#include "jcdimer/validation.hpp"

using namespace jcdimer;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const char* id, const char* what, bool ok, const std::string& detail) {
  std::printf("%s %s  %s  (%s)\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs `body` and reports instead of aborting if it throws.
void guarded(const char* id, const char* what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, what, false, std::string("exception: ") + e.what());
  }
}

// Single-cavity levels written out directly: n omega_c + x/2 -/+ sqrt(x^2 + 8 g^2 n)/2,
// with the empty cavity at 0.
std::vector<double> cavity_levels(int n, double omega_c, double x, double g) {
  if (n == 0) return {0.0};
  const double r = 0.5 * std::sqrt(x * x + 8.0 * g * g * n);
  return {n * omega_c + 0.5 * x - r, n * omega_c + 0.5 * x + r};
}

std::vector<double> decoupled_levels(int n, double omega_c, double x, double g) {
  std::vector<double> out;
  for (int m = 0; m <= n; ++m)
    for (double a : cavity_levels(m, omega_c, x, g))
      for (double b : cavity_levels(n - m, omega_c, x, g)) out.push_back(a + b);
  std::sort(out.begin(), out.end());
  return out;
}

// V^T H V with V built here from the state labels.
double pullback_error(const ModelParams& p) {
  const auto eff = enumerate_effective_basis(p.n_excitations);
  const auto full = enumerate_full_basis(p.n_excitations);
  const auto h_full = build_full_hamiltonian(p, full);
  const auto h_eff = build_effective_hamiltonian(p, eff);

  const double r = 1.0 / std::sqrt(2.0);
  auto pair = [&](int s) -> std::vector<std::pair<std::array<int, 2>, double>> {
    if (s == 0) return {{{0, 0}, 1.0}};
    return {{{1, 0}, r}, {{0, 1}, r}};
  };
  std::vector<std::vector<std::pair<std::size_t, double>>> cols;
  for (const auto& s : eff) {
    std::vector<std::pair<std::size_t, double>> col;
    for (const auto& [a, ca] : pair(s.s1))
      for (const auto& [b, cb] : pair(s.s2))
        col.emplace_back(full.index_of({a[0], a[1], s.n1, b[0], b[1], s.n2}), ca * cb);
    cols.push_back(col);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < eff.size(); ++i)
    for (std::size_t j = 0; j < eff.size(); ++j) {
      double acc = 0.0;
      for (const auto& [ri, ci] : cols[i])
        for (const auto& [rj, cj] : cols[j]) acc += ci * h_full(ri, rj) * cj;
      worst = std::max(worst, std::abs(acc - h_eff(i, j)));
    }
  return worst;
}

void criterion_decoupled_spectrum() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> d(-10.0, 10.0), j(0.0, 10.0), w(-2.0, 2.0);
  const auto basis = enumerate_effective_basis(2);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto p = ModelParams::from_detuning(d(rng), j(rng), 0.0, 1.0, w(rng));
    const auto ev = eigen_decompose(build_effective_hamiltonian(p, basis)).eigenvalues;
    const auto ref = decoupled_levels(2, p.omega_c, p.detuning_plus_dipole(), p.g);
    for (std::size_t k = 0; k < ev.size(); ++k) worst = std::max(worst, std::abs(ev[k] - ref[k]));
  }
  const double dt = seconds_since(t0);
  report("C1", "A=0 spectrum equals sums of dressed energies (50 points)", worst <= 1e-10 && dt < 1.0,
         fmt("max error %.3g <= 1e-10, %.3gs < 1s", worst, dt));
}

void criterion_pullback() {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> d(-10.0, 10.0), j(0.0, 10.0), a(0.0, 0.2), w(-2.0, 2.0);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int t = 0; t < 20; ++t)
    worst = std::max(worst, pullback_error(ModelParams::from_detuning(d(rng), j(rng), a(rng), 1.0, w(rng))));
  const double dt = seconds_since(t0);
  report("C2", "full model pulled back through the symmetric isometry equals the effective model (20 points)",
         worst <= 1e-12 && dt < 1.0, fmt("max entry error %.3g <= 1e-12, %.3gs < 1s", worst, dt));
}

void criterion_gap() {
  const auto rows = gap_curve(0.0, 10.0, 200, ModelParams::from_detuning(0.0, 0.0, 0.1));
  const double err = std::abs(rows.front().gaps.dE1 - (2.0 * std::sqrt(2.0) - 2.0));
  bool monotone = true;
  for (std::size_t k = 1; k < rows.size(); ++k) monotone = monotone && rows[k].gaps.dE1 <= rows[k - 1].gaps.dE1;
  report("C3", "lowest gap at resonance equals 2sqrt2-2 and decreases with J over 200 points",
         err <= 1e-12 && monotone && rows.back().gaps.dE1 > 0.0,
         fmt("error %.3g <= 1e-12, dE1(J=10) = %.6g", err, rows.back().gaps.dE1) +
             (monotone ? ", monotone" : ", NOT monotone"));
}

const PhaseGrid& default_grid(double* elapsed = nullptr) {
  static double dt = 0.0;
  static const PhaseGrid grid = [] {
    const auto t0 = Clock::now();
    auto g = sweep(SweepSpec{});
    dt = seconds_since(t0);
    return g;
  }();
  if (elapsed) *elapsed = dt;
  return grid;
}

void criterion_ceiling() {
  const auto& grid = default_grid();
  const auto top = std::max_element(grid.cells.begin(), grid.cells.end(),
                                    [](const auto& a, const auto& b) { return a.var_N1 < b.var_N1; });
  const double x = top->delta + top->J;
  report("C4", "photon-number variance ceiling on the default grid",
         std::abs(top->var_N1 - 0.5) <= 0.02 && x > 5.0,
         fmt("max var_N1 = %.6g (0.5 +/- 0.02) at Delta+J = %.4g (> 5)", top->var_N1, x));
}

void criterion_reference_points() {
  const SweepSpec spec;
  struct Point {
    double delta, J;
    PhaseLabel expected;
  };
  const Point points[] = {{-10.0, 0.1, PhaseLabel::atomic_insulator},
                          {0.0, 0.1, PhaseLabel::polaritonic_insulator},
                          {0.0, 1.0, PhaseLabel::polaritonic_superfluid},
                          {10.0, 1.0, PhaseLabel::photonic_superfluid}};
  bool ok = true;
  std::string detail;
  for (const auto& pt : points) {
    const auto c = evaluate_cell(spec, pt.delta, pt.J);
    ok = ok && c.phase == pt.expected;
    if (!detail.empty()) detail += "; ";
    detail += fmt("(%g,%g) ", pt.delta, pt.J) + std::string(to_string(c.phase));
  }
  report("C5", "reference points classify into the four phases", ok, detail);
}

void criterion_photonic_split() {
  const auto r = ground_state_report(ModelParams::from_detuning(10.0, 1.0, 0.1));
  const auto& p = r.subspaces->p;
  const double split = std::abs(p[0] - p[1]);
  const double rest = p[2] + p[3] + p[4];
  report("C6", "photonic superfluid splits evenly between phi1 and phi2", split < 0.02 && rest < 0.01,
         fmt("|p1-p2| = %.3g < 0.02, p3+p4+p5 = %.3g < 0.01", split, rest));
}

void criterion_properties() {
  ValidationOptions opts;
  opts.random_draws = 99;
  opts.seed = 1003;
  bool ok = true;
  std::string detail;
  for (const auto& c : run_validation(ModelParams::from_detuning(0.0, 0.1, 0.1), opts)) {
    ok = ok && c.passed;
    detail += c.name + fmt(" %.2g/%.0e; ", c.max_error, c.tolerance);
  }

  // Completeness over arbitrary normalized states.
  std::mt19937_64 rng(1004);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> d(-10.0, 10.0), j(0.0, 10.0);
  const auto basis = enumerate_effective_basis(2);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> v(basis.size());
    double norm = 0.0;
    for (double& x : v) norm += (x = gauss(rng)) * x;
    for (double& x : v) x /= std::sqrt(norm);
    const auto sp = subspace_probabilities(v, ModelParams::from_detuning(d(rng), j(rng), 0.1), basis);
    const auto ch = excitation_character(v, basis);
    worst = std::max({worst, std::abs(sp.total() - 1.0), std::abs(ch.photonic + ch.atomic + ch.mixed - 1.0)});
  }
  ok = ok && worst <= 1e-10;
  detail += fmt("completeness %.2g/1e-10", worst);
  report("C7a", "property suite over 100 seeded points", ok, detail);

  std::ifstream in(JCDIMER_GOLDEN_DIR "/default_sweep.csv");
  if (!in) {
    report("C7b", "default sweep matches the stored snapshot", false, "snapshot missing");
    return;
  }
  const auto golden = read_grid_csv(in);
  const auto& grid = default_grid();
  bool same = golden.cells.size() == grid.cells.size();
  double dev = 0.0;
  for (std::size_t c = 0; same && c < grid.cells.size(); ++c) {
    const auto& a = grid.cells[c];
    const auto& b = golden.cells[c];
    dev = std::max({dev, std::abs(a.var_N1 - b.var_N1), std::abs(a.var_NA1 - b.var_NA1),
                    std::abs(a.product - b.product)});
    same = a.phase == b.phase && std::abs(a.delta - b.delta) < 1e-12 && std::abs(a.J - b.J) < 1e-12;
  }
  report("C7b", "default sweep matches the stored snapshot", same && dev <= 1e-9,
         fmt("max deviation %.3g <= 1e-9", dev) + (same ? ", labels identical" : ", labels or axes differ"));
}

void criterion_runtime() {
  double dt = 0.0;
  const auto& grid = default_grid(&dt);
  report("C8", "81x81 default sweep runtime", grid.cells.size() == 81 * 81 && dt < 5.0,
         fmt("%.3gs < 5s", dt));
}

}  // namespace

int main() {
  guarded("C1", "A=0 spectrum", criterion_decoupled_spectrum);
  guarded("C2", "isometry pullback", criterion_pullback);
  guarded("C3", "resonance gap", criterion_gap);
  guarded("C8", "sweep runtime", criterion_runtime);
  guarded("C4", "variance ceiling", criterion_ceiling);
  guarded("C5", "reference points", criterion_reference_points);
  guarded("C6", "photonic split", criterion_photonic_split);
  guarded("C7", "property suite", criterion_properties);
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
