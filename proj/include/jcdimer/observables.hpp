#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "jcdimer/eigensolver.hpp"
#include "jcdimer/model.hpp"

namespace jcdimer {

// Weights of the five dressed product subspaces of the two-excitation sector:
//   p[0]  {1-,1-}
//   p[1]  {2-,0}, {0,2-}
//   p[2]  {1-,1+}, {1+,1-}
//   p[3]  {2+,0}, {0,2+}
//   p[4]  {1+,1+}
struct SubspaceProbabilities {
  std::array<double, 5> p{};

  [[nodiscard]] double total() const { return p[0] + p[1] + p[2] + p[3] + p[4]; }
};

struct ExcitationCharacter {
  double photonic = 0.0;
  double atomic = 0.0;
  double mixed = 0.0;
};

struct OrderParameters {
  double var_N1 = 0.0;   // cavity-1 photons + atomic excitation
  double var_NA1 = 0.0;  // cavity-1 atomic excitation only
  double product = 0.0;
};

// Requires the n = 2 effective basis and a unit-norm state.
SubspaceProbabilities subspace_probabilities(std::span<const double> state, const ModelParams& params,
                                             const EffectiveBasis& basis);

// The eight dressed product vectors spanning the n = 2 effective sector,
// grouped by subspace (1, 2, 2, 2, 1 vectors).
std::array<std::vector<std::vector<double>>, 5> dressed_subspace_vectors(const ModelParams& params,
                                                                         const EffectiveBasis& basis);

ExcitationCharacter excitation_character(std::span<const double> state, const EffectiveBasis& basis);
ExcitationCharacter excitation_character(std::span<const double> state, const FullBasis& basis);

double excitation_variance(std::span<const double> state, const EffectiveBasis& basis);
double excitation_variance(std::span<const double> state, const FullBasis& basis);
double atomic_excitation_variance(std::span<const double> state, const EffectiveBasis& basis);
double atomic_excitation_variance(std::span<const double> state, const FullBasis& basis);

OrderParameters order_parameters(std::span<const double> state, const EffectiveBasis& basis);

// Same variances for cavity 2; used by the swap-symmetry check.
double excitation_variance_cavity2(std::span<const double> state, const EffectiveBasis& basis);
double atomic_excitation_variance_cavity2(std::span<const double> state, const EffectiveBasis& basis);

// Distribution of the cavity-1 (or cavity-2) total excitation number, indexed 0..N.
std::vector<double> excitation_marginal(std::span<const double> state, const EffectiveBasis& basis, int cavity);

// <psi|O^2|psi> - <psi|O|psi>^2 through explicit matrix-vector products; the
// independent route for the diagonal variance functions above.
double operator_variance(std::span<const double> state, const SymMatrix& op);
SymMatrix cavity1_excitation_operator(const EffectiveBasis& basis);
SymMatrix cavity1_atomic_operator(const EffectiveBasis& basis);

enum class ModelKind { effective, full };

struct GroundStateReport {
  ModelParams params;
  ModelKind model = ModelKind::effective;
  double energy = 0.0;
  std::vector<double> state;
  bool degenerate = false;
  double gap = 0.0;
  // Only for the two-excitation sector. For the full model these are taken from
  // the normalized projection onto the symmetric no-|ee> subspace.
  std::optional<SubspaceProbabilities> subspaces;
  // Norm^2 of that projection; 1 for the effective model.
  double symmetric_weight = 1.0;
  ExcitationCharacter character;
  OrderParameters order;
};

GroundStateReport ground_state_report(const ModelParams& params, ModelKind model = ModelKind::effective,
                                      const EigenOptions& eigen = {}, double degeneracy_tol = 1e-9);

}  // namespace jcdimer
