#include "jcdimer/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "jcdimer/analytics.hpp"
#include "jcdimer/eigensolver.hpp"
#include "jcdimer/observables.hpp"

namespace jcdimer {

std::vector<ModelParams> random_parameter_points(const ModelParams& base, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> delta(-10.0, 10.0);
  std::uniform_real_distribution<double> dipole(0.0, 10.0);
  std::uniform_real_distribution<double> hop(0.0, 0.2);
  std::vector<ModelParams> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double d = delta(rng);
    const double j = dipole(rng);
    const double a = hop(rng);
    out.push_back(ModelParams::from_detuning(d * base.g, j * base.g, a * base.g, base.g, base.omega_c,
                                             base.n_excitations));
  }
  return out;
}

SymMatrix corrupted_effective_hamiltonian(const ModelParams& params, const EffectiveBasis& basis) {
  auto h = build_effective_hamiltonian(params, basis);
  if (h.dim() > 1) h.add(0, h.dim() - 1, 1e-6);
  return h;
}

namespace {

std::string describe(const ModelParams& p) {
  std::ostringstream s;
  s << "delta=" << p.delta() << " J=" << p.J << " A=" << p.A << " g=" << p.g;
  return s.str();
}

// Accumulates the worst error across points for one named check.
class Tracker {
 public:
  Tracker(std::string name, double tol) {
    result_.name = std::move(name);
    result_.tolerance = tol;
  }

  void record(double error, const ModelParams& p) {
    ++result_.points;
    if (!(error <= result_.max_error) || std::isnan(error)) {
      result_.max_error = error;
      worst_ = describe(p);
    }
  }
  void note(std::string text) { notes_ = std::move(text); }

  CheckResult finish() {
    result_.passed = result_.max_error <= result_.tolerance && !std::isnan(result_.max_error);
    if (!result_.passed)
      result_.detail = "max entry error at " + worst_;
    else
      result_.detail = notes_;
    return result_;
  }

 private:
  CheckResult result_;
  std::string worst_;
  std::string notes_;
};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Observables that must depend on delta and J only through their sum.
std::vector<double> collapse_signature(const ModelParams& p, const EffectiveBuilder& builder) {
  const auto basis = enumerate_effective_basis(p.n_excitations);
  const auto gs = ground_state(eigen_decompose(builder(p, basis)));
  const auto order = order_parameters(gs.vector, basis);
  const auto ch = excitation_character(gs.vector, basis);
  std::vector<double> sig{gs.energy, order.var_N1, order.var_NA1, ch.photonic, ch.atomic, ch.mixed};
  if (p.n_excitations == 2) {
    const auto sp = subspace_probabilities(gs.vector, p, basis);
    sig.insert(sig.end(), sp.p.begin(), sp.p.end());
  }
  return sig;
}

}  // namespace

std::vector<CheckResult> run_validation(const ModelParams& base, const ValidationOptions& options) {
  base.validate();
  std::vector<ModelParams> points{base};
  const auto drawn = random_parameter_points(base, options.random_draws, options.seed);
  points.insert(points.end(), drawn.begin(), drawn.end());

  Tracker isometry("truncated-isometry exactness", 1e-12);
  Tracker analytic("A=0 analytic spectrum", 1e-10);
  Tracker variance("variance double computation", 1e-12);
  Tracker swap("cavity-swap symmetry", 1e-10);
  Tracker collapse("delta+J collapse", 1e-10);
  int skipped_degenerate = 0;

  const auto eff = enumerate_effective_basis(base.n_excitations);
  const auto full = enumerate_full_basis(base.n_excitations);
  const auto embedding = symmetric_truncated_embedding(full, eff);

  for (const auto& p : points) {
    const auto h_eff = options.effective_builder(p, eff);
    isometry.record(embedding.isometry.pullback(build_full_hamiltonian(p, full)).max_abs_difference(h_eff), p);

    ModelParams decoupled = p;
    decoupled.A = 0.0;
    analytic.record(max_abs_diff(eigen_decompose(options.effective_builder(decoupled, eff)).eigenvalues,
                                 decoupled_sector_energies(decoupled)),
                    p);

    const auto gs = ground_state(eigen_decompose(h_eff));
    const double dv = std::max(
        std::abs(excitation_variance(gs.vector, eff) - operator_variance(gs.vector, cavity1_excitation_operator(eff))),
        std::abs(atomic_excitation_variance(gs.vector, eff) -
                 operator_variance(gs.vector, cavity1_atomic_operator(eff))));
    variance.record(dv, p);

    if (gs.degenerate) {
      ++skipped_degenerate;
    } else {
      double sw = std::abs(excitation_variance(gs.vector, eff) - excitation_variance_cavity2(gs.vector, eff));
      sw = std::max(sw, std::abs(atomic_excitation_variance(gs.vector, eff) -
                                 atomic_excitation_variance_cavity2(gs.vector, eff)));
      sw = std::max(sw, max_abs_diff(excitation_marginal(gs.vector, eff, 1), excitation_marginal(gs.vector, eff, 2)));
      swap.record(sw, p);
    }

    // Move 0.75 g of detuning into the dipole term; omega_c stays fixed.
    ModelParams shifted = p;
    shifted.omega_a += 0.75 * p.g;
    shifted.J -= 0.75 * p.g;
    collapse.record(max_abs_diff(collapse_signature(p, options.effective_builder),
                                 collapse_signature(shifted, options.effective_builder)),
                    p);
  }
  if (skipped_degenerate > 0) swap.note(std::to_string(skipped_degenerate) + " degenerate point(s) skipped");

  return {isometry.finish(), analytic.finish(), variance.finish(), swap.finish(), collapse.finish()};
}

}  // namespace jcdimer
