#include "jcdimer/observables.hpp"

#include <cmath>
#include <string>

#include "jcdimer/analytics.hpp"
#include "jcdimer/errors.hpp"

namespace jcdimer {

namespace {

constexpr double kNormTolerance = 1e-8;

void require_unit_norm(std::span<const double> state, std::size_t dim) {
  if (state.size() != dim) throw ContractViolation("state length does not match basis dimension");
  double norm2 = 0.0;
  for (double x : state) norm2 += x * x;
  if (std::abs(norm2 - 1.0) > kNormTolerance)
    throw ContractViolation("state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
}

// Variance of a quantity that is diagonal in the product basis.
template <typename Basis, typename Quantity>
double diagonal_variance(std::span<const double> state, const Basis& basis, Quantity quantity) {
  require_unit_norm(state, basis.size());
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double w = state[i] * state[i];
    const double q = quantity(basis[i]);
    mean += w * q;
    second += w * q * q;
  }
  return std::max(0.0, second - mean * mean);
}

struct CavityComponent {
  int s;
  int n;
  double amplitude;
};

// Per-cavity dressed state as (s, n, amplitude) components.
std::vector<CavityComponent> cavity_state(int k, Branch branch, const ModelParams& params) {
  if (k == 0) return {{0, 0, 1.0}};
  const auto d = dressed_state(k, branch, params);
  return {{1, k - 1, d.excited_amplitude}, {0, k, d.ground_amplitude}};
}

std::vector<double> product_vector(const std::vector<CavityComponent>& c1, const std::vector<CavityComponent>& c2,
                                   const EffectiveBasis& basis) {
  std::vector<double> v(basis.size(), 0.0);
  for (const auto& a : c1)
    for (const auto& b : c2) v[basis.index_of({a.s, a.n, b.s, b.n})] += a.amplitude * b.amplitude;
  return v;
}

template <typename Basis, typename Classify>
ExcitationCharacter classify_character(std::span<const double> state, const Basis& basis, Classify classify) {
  require_unit_norm(state, basis.size());
  ExcitationCharacter out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double w = state[i] * state[i];
    const auto [photons, atoms] = classify(basis[i]);
    if (atoms == 0)
      out.photonic += w;
    else if (photons == 0)
      out.atomic += w;
    else
      out.mixed += w;
  }
  return out;
}

}  // namespace

std::array<std::vector<std::vector<double>>, 5> dressed_subspace_vectors(const ModelParams& params,
                                                                         const EffectiveBasis& basis) {
  if (basis.n_excitations() != 2)
    throw ContractViolation("dressed subspaces are defined for the two-excitation sector only");
  using enum Branch;
  const auto zero = cavity_state(0, minus, params);
  const auto one_m = cavity_state(1, minus, params);
  const auto one_p = cavity_state(1, plus, params);
  const auto two_m = cavity_state(2, minus, params);
  const auto two_p = cavity_state(2, plus, params);

  std::array<std::vector<std::vector<double>>, 5> out;
  out[0] = {product_vector(one_m, one_m, basis)};
  out[1] = {product_vector(two_m, zero, basis), product_vector(zero, two_m, basis)};
  out[2] = {product_vector(one_m, one_p, basis), product_vector(one_p, one_m, basis)};
  out[3] = {product_vector(two_p, zero, basis), product_vector(zero, two_p, basis)};
  out[4] = {product_vector(one_p, one_p, basis)};
  return out;
}

SubspaceProbabilities subspace_probabilities(std::span<const double> state, const ModelParams& params,
                                             const EffectiveBasis& basis) {
  require_unit_norm(state, basis.size());
  const auto groups = dressed_subspace_vectors(params, basis);
  SubspaceProbabilities out;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& v : groups[g]) {
      double overlap = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) overlap += v[i] * state[i];
      out.p[g] += overlap * overlap;
    }
  }
  return out;
}

ExcitationCharacter excitation_character(std::span<const double> state, const EffectiveBasis& basis) {
  return classify_character(state, basis, [](const EffectiveBasisState& s) {
    return std::pair{s.n1 + s.n2, s.s1 + s.s2};
  });
}

ExcitationCharacter excitation_character(std::span<const double> state, const FullBasis& basis) {
  return classify_character(state, basis, [](const FullBasisState& s) {
    return std::pair{s.n1 + s.n2, s.e1 + s.e2 + s.e3 + s.e4};
  });
}

double excitation_variance(std::span<const double> state, const EffectiveBasis& basis) {
  return diagonal_variance(state, basis, [](const EffectiveBasisState& s) { return s.n1 + s.s1; });
}

double excitation_variance(std::span<const double> state, const FullBasis& basis) {
  return diagonal_variance(state, basis, [](const FullBasisState& s) { return s.n1 + s.e1 + s.e2; });
}

double atomic_excitation_variance(std::span<const double> state, const EffectiveBasis& basis) {
  return diagonal_variance(state, basis, [](const EffectiveBasisState& s) { return s.s1; });
}

double atomic_excitation_variance(std::span<const double> state, const FullBasis& basis) {
  return diagonal_variance(state, basis, [](const FullBasisState& s) { return s.e1 + s.e2; });
}

double excitation_variance_cavity2(std::span<const double> state, const EffectiveBasis& basis) {
  return diagonal_variance(state, basis, [](const EffectiveBasisState& s) { return s.n2 + s.s2; });
}

double atomic_excitation_variance_cavity2(std::span<const double> state, const EffectiveBasis& basis) {
  return diagonal_variance(state, basis, [](const EffectiveBasisState& s) { return s.s2; });
}

OrderParameters order_parameters(std::span<const double> state, const EffectiveBasis& basis) {
  OrderParameters o;
  o.var_N1 = excitation_variance(state, basis);
  o.var_NA1 = atomic_excitation_variance(state, basis);
  o.product = o.var_N1 * o.var_NA1;
  return o;
}

std::vector<double> excitation_marginal(std::span<const double> state, const EffectiveBasis& basis, int cavity) {
  if (cavity != 1 && cavity != 2) throw ContractViolation("cavity index must be 1 or 2");
  require_unit_norm(state, basis.size());
  std::vector<double> dist(basis.n_excitations() + 1, 0.0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& s = basis[i];
    dist[cavity == 1 ? s.n1 + s.s1 : s.n2 + s.s2] += state[i] * state[i];
  }
  return dist;
}

double operator_variance(std::span<const double> state, const SymMatrix& op) {
  require_unit_norm(state, op.dim());
  const auto o_psi = op.multiply(state);
  double mean = 0.0;
  double second = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    mean += state[i] * o_psi[i];
    second += o_psi[i] * o_psi[i];  // <psi|O^2|psi> = |O psi|^2 for symmetric O
  }
  return second - mean * mean;
}

SymMatrix cavity1_excitation_operator(const EffectiveBasis& basis) {
  SymMatrix op(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) op.set(i, i, basis[i].n1 + basis[i].s1);
  return op;
}

SymMatrix cavity1_atomic_operator(const EffectiveBasis& basis) {
  SymMatrix op(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) op.set(i, i, basis[i].s1);
  return op;
}

GroundStateReport ground_state_report(const ModelParams& params, ModelKind model, const EigenOptions& eigen,
                                      double degeneracy_tol) {
  params.validate();
  GroundStateReport r;
  r.params = params;
  r.model = model;
  const auto effective = enumerate_effective_basis(params.n_excitations);

  auto fill_ground = [&](const SymMatrix& h) {
    const auto gs = ground_state(eigen_decompose(h, eigen), degeneracy_tol);
    r.energy = gs.energy;
    r.state = gs.vector;
    r.degenerate = gs.degenerate;
    r.gap = gs.gap;
  };

  if (model == ModelKind::effective) {
    fill_ground(build_effective_hamiltonian(params, effective));
    r.character = excitation_character(r.state, effective);
    r.order = order_parameters(r.state, effective);
    if (params.n_excitations == 2) r.subspaces = subspace_probabilities(r.state, params, effective);
    return r;
  }

  const auto full = enumerate_full_basis(params.n_excitations);
  fill_ground(build_full_hamiltonian(params, full));
  r.character = excitation_character(r.state, full);
  r.order.var_N1 = excitation_variance(r.state, full);
  r.order.var_NA1 = atomic_excitation_variance(r.state, full);
  r.order.product = r.order.var_N1 * r.order.var_NA1;

  auto projected = symmetric_truncated_embedding(full, effective).isometry.project(r.state);
  double weight = 0.0;
  for (double x : projected) weight += x * x;
  r.symmetric_weight = weight;
  if (params.n_excitations == 2 && weight > 1e-12) {
    const double inv = 1.0 / std::sqrt(weight);
    for (double& x : projected) x *= inv;
    r.subspaces = subspace_probabilities(projected, params, effective);
  }
  return r;
}

}  // namespace jcdimer
