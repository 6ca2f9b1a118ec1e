#include "jcdimer/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace jcdimer {

ModelParams ModelParams::from_detuning(double delta, double J, double A, double g, double omega_c,
                                       int n_excitations) {
  ModelParams p;
  p.omega_c = omega_c;
  p.omega_a = omega_c + delta;
  p.g = g;
  p.J = J;
  p.A = A;
  p.n_excitations = n_excitations;
  return p;
}

void ModelParams::validate() const {
  if (!(std::isfinite(omega_c) && std::isfinite(omega_a) && std::isfinite(g) && std::isfinite(J) &&
        std::isfinite(A)))
    throw ContractViolation("model parameters must be finite");
  if (!(g > 0.0)) throw ContractViolation("atom-field coupling g must be positive");
  if (n_excitations < 0) throw ContractViolation("excitation number must be non-negative");
}

double dipole_coupling_strength(const DipoleGeometry& geom, bool perpendicular) {
  if (!(geom.separation > 0.0)) throw DomainError("atom separation must be positive");
  const double r3 = geom.separation * geom.separation * geom.separation;
  if (perpendicular) return geom.dipole_moment_sq / r3;
  const double c = std::cos(geom.angle);
  return geom.dipole_moment_sq * (1.0 - 3.0 * c * c) / r3;
}

EffectiveBasis enumerate_effective_basis(int n_excitations) {
  if (n_excitations < 0) throw ContractViolation("excitation number must be non-negative");
  std::vector<EffectiveBasisState> states;
  for (int s1 = 0; s1 <= 1; ++s1)
    for (int n1 = 0; s1 + n1 <= n_excitations; ++n1)
      for (int s2 = 0; s2 <= 1; ++s2) {
        const int n2 = n_excitations - s1 - n1 - s2;
        if (n2 >= 0) states.push_back({s1, n1, s2, n2});
      }
  return EffectiveBasis(n_excitations, std::move(states));
}

FullBasis enumerate_full_basis(int n_excitations) {
  if (n_excitations < 0) throw ContractViolation("excitation number must be non-negative");
  std::vector<FullBasisState> states;
  for (int e1 = 0; e1 <= 1; ++e1)
    for (int e2 = 0; e2 <= 1; ++e2)
      for (int n1 = 0; e1 + e2 + n1 <= n_excitations; ++n1)
        for (int e3 = 0; e3 <= 1; ++e3)
          for (int e4 = 0; e4 <= 1; ++e4) {
            const int n2 = n_excitations - e1 - e2 - n1 - e3 - e4;
            if (n2 >= 0) states.push_back({e1, e2, n1, e3, e4, n2});
          }
  return FullBasis(n_excitations, std::move(states));
}

namespace {

void check_sector(const ModelParams& params, int basis_excitations) {
  params.validate();
  if (params.n_excitations != basis_excitations)
    throw ContractViolation("basis sector (" + std::to_string(basis_excitations) +
                            ") does not match params.n_excitations (" +
                            std::to_string(params.n_excitations) + ")");
}

// Writes a symmetric off-diagonal element after checking that it stays inside the sector.
template <typename State>
void couple(SymMatrix& h, const Basis<State>& basis, std::size_t from, const State& to, double value) {
  if (to.excitations() != basis[from].excitations())
    throw ContractViolation("matrix element would change the excitation number");
  h.set(from, basis.index_of(to), value);
}

}  // namespace

SymMatrix build_effective_hamiltonian(const ModelParams& params, const EffectiveBasis& basis) {
  check_sector(params, basis.n_excitations());
  const double atom_level = params.omega_a + params.J;
  const double collective_g = std::numbers::sqrt2 * params.g;

  SymMatrix h(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& s = basis[i];
    h.set(i, i, params.omega_c * (s.n1 + s.n2) + atom_level * (s.s1 + s.s2));

    // a^dag sigma: fictitious atom emits into its own cavity
    if (s.s1 == 1) couple(h, basis, i, {0, s.n1 + 1, s.s2, s.n2}, collective_g * std::sqrt(s.n1 + 1.0));
    if (s.s2 == 1) couple(h, basis, i, {s.s1, s.n1, 0, s.n2 + 1}, collective_g * std::sqrt(s.n2 + 1.0));

    // a1^dag a2 hopping
    if (s.n2 > 0)
      couple(h, basis, i, {s.s1, s.n1 + 1, s.s2, s.n2 - 1}, params.A * std::sqrt((s.n1 + 1.0) * s.n2));
  }
  return h;
}

SymMatrix build_full_hamiltonian(const ModelParams& params, const FullBasis& basis) {
  check_sector(params, basis.n_excitations());
  const double g = params.g;

  SymMatrix h(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& s = basis[i];
    h.set(i, i, params.omega_c * (s.n1 + s.n2) + params.omega_a * (s.e1 + s.e2 + s.e3 + s.e4));

    const double emit1 = g * std::sqrt(s.n1 + 1.0);
    const double emit2 = g * std::sqrt(s.n2 + 1.0);
    if (s.e1 == 1) couple(h, basis, i, {0, s.e2, s.n1 + 1, s.e3, s.e4, s.n2}, emit1);
    if (s.e2 == 1) couple(h, basis, i, {s.e1, 0, s.n1 + 1, s.e3, s.e4, s.n2}, emit1);
    if (s.e3 == 1) couple(h, basis, i, {s.e1, s.e2, s.n1, 0, s.e4, s.n2 + 1}, emit2);
    if (s.e4 == 1) couple(h, basis, i, {s.e1, s.e2, s.n1, s.e3, 0, s.n2 + 1}, emit2);

    // dipole exchange sigma_1^dag sigma_2 + h.c., each pair visited from the (1,0) side
    if (s.e1 == 1 && s.e2 == 0) couple(h, basis, i, {0, 1, s.n1, s.e3, s.e4, s.n2}, params.J);
    if (s.e3 == 1 && s.e4 == 0) couple(h, basis, i, {s.e1, s.e2, s.n1, 0, 1, s.n2}, params.J);

    if (s.n2 > 0)
      couple(h, basis, i, {s.e1, s.e2, s.n1 + 1, s.e3, s.e4, s.n2 - 1},
             params.A * std::sqrt((s.n1 + 1.0) * s.n2));
  }
  return h;
}

SymMatrix Isometry::pullback(const SymMatrix& m) const {
  if (m.dim() != rows_) throw ContractViolation("pullback: matrix dimension does not match isometry rows");
  // M V, then V^T (M V) on the upper triangle only.
  std::vector<double> mv(rows_ * cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < rows_; ++k) {
      const double mrk = m(r, k);
      if (mrk == 0.0) continue;
      for (std::size_t c = 0; c < cols_; ++c) mv[r * cols_ + c] += mrk * (*this)(k, c);
    }
  SymMatrix out(cols_);
  for (std::size_t i = 0; i < cols_; ++i)
    for (std::size_t j = i; j < cols_; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < rows_; ++r) acc += (*this)(r, i) * mv[r * cols_ + j];
      out.set(i, j, acc);
    }
  return out;
}

std::vector<double> Isometry::project(const std::vector<double>& full_vector) const {
  if (full_vector.size() != rows_) throw ContractViolation("project: vector length does not match isometry rows");
  std::vector<double> out(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c) * full_vector[r];
  return out;
}

Embedding symmetric_truncated_embedding(const FullBasis& full, const EffectiveBasis& effective) {
  if (full.n_excitations() != effective.n_excitations())
    throw ContractViolation("embedding: bases belong to different excitation sectors");

  struct AtomPair {
    int first;
    int second;
    double amplitude;
  };
  const double h = std::numbers::sqrt2 / 2.0;
  auto atoms_for = [h](int s) -> std::vector<AtomPair> {
    if (s == 0) return {{0, 0, 1.0}};
    return {{1, 0, h}, {0, 1, h}};
  };

  Embedding out{{}, Isometry(full.size(), effective.size())};
  out.index_map.resize(effective.size());
  for (std::size_t k = 0; k < effective.size(); ++k) {
    const auto& s = effective[k];
    for (const auto& c1 : atoms_for(s.s1))
      for (const auto& c2 : atoms_for(s.s2)) {
        const FullBasisState image{c1.first, c1.second, s.n1, c2.first, c2.second, s.n2};
        const std::size_t r = full.index_of(image);
        const double amp = c1.amplitude * c2.amplitude;
        out.index_map[k].emplace_back(r, amp);
        out.isometry(r, k) = amp;
      }
  }
  return out;
}

}  // namespace jcdimer
