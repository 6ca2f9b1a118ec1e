#pragma once

// Two coupled single-mode cavities, each holding a dipole-coupled pair of
// two-level atoms. Everything here is expressed in units of the atom-field
// coupling g.
//
// Two descriptions of the same physics are provided:
//   * the full model: both atoms per cavity kept explicitly (6 quantum numbers);
//   * the effective model: each atom pair rotated into a symmetric "fictitious"
//     atom with level omega_a + J and coupling sqrt(2) g, the antisymmetric
//     partner and the doubly excited |ee> channel dropped.
// symmetric_truncated_embedding() relates the two exactly.

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jcdimer/errors.hpp"
#include "jcdimer/sym_matrix.hpp"

namespace jcdimer {

struct ModelParams {
  double omega_c = 0.0;
  double omega_a = 0.0;
  double g = 1.0;
  double J = 0.0;
  double A = 0.0;
  int n_excitations = 2;

  [[nodiscard]] double delta() const { return omega_a - omega_c; }
  [[nodiscard]] double detuning_plus_dipole() const { return delta() + J; }

  // Build from detuning rather than the bare atomic frequency.
  static ModelParams from_detuning(double delta, double J, double A, double g = 1.0,
                                   double omega_c = 0.0, int n_excitations = 2);

  // Throws ContractViolation unless g > 0, n >= 0 and all values are finite.
  void validate() const;
};

struct DipoleGeometry {
  double dipole_moment_sq = 1.0;
  double separation = 1.0;
  double angle = 0.0;  // radians, between the interatomic axis and the dipole moment
};

// |d|^2 (1 - 3 cos^2 angle) / r^3, or |d|^2 / r^3 for dipoles perpendicular to the axis.
double dipole_coupling_strength(const DipoleGeometry& geom, bool perpendicular = false);

struct EffectiveBasisState {
  int s1 = 0;  // fictitious atom in cavity 1: 0 ground, 1 excited
  int n1 = 0;
  int s2 = 0;
  int n2 = 0;

  [[nodiscard]] int excitations() const { return s1 + n1 + s2 + n2; }
  auto operator<=>(const EffectiveBasisState&) const = default;
};

struct FullBasisState {
  int e1 = 0;
  int e2 = 0;
  int n1 = 0;
  int e3 = 0;
  int e4 = 0;
  int n2 = 0;

  [[nodiscard]] int excitations() const { return e1 + e2 + n1 + e3 + e4 + n2; }
  auto operator<=>(const FullBasisState&) const = default;
};

// Ordered set of number-conserving product states with O(log n) reverse lookup.
template <typename State>
class Basis {
 public:
  Basis(int n_excitations, std::vector<State> states)
      : n_excitations_(n_excitations), states_(std::move(states)) {
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (states_[i].excitations() != n_excitations_)
        throw ContractViolation("basis state outside the excitation sector");
      if (!index_.emplace(states_[i], i).second)
        throw ContractViolation("duplicate basis state");
    }
  }

  [[nodiscard]] int n_excitations() const { return n_excitations_; }
  [[nodiscard]] std::size_t size() const { return states_.size(); }
  [[nodiscard]] const State& operator[](std::size_t i) const { return states_[i]; }
  [[nodiscard]] const std::vector<State>& states() const { return states_; }

  [[nodiscard]] bool contains(const State& s) const { return index_.contains(s); }
  [[nodiscard]] std::size_t index_of(const State& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw ContractViolation("state not in basis");
    return it->second;
  }

  auto begin() const { return states_.begin(); }
  auto end() const { return states_.end(); }

  bool operator==(const Basis& other) const {
    return n_excitations_ == other.n_excitations_ && states_ == other.states_;
  }

 private:
  int n_excitations_;
  std::vector<State> states_;
  std::map<State, std::size_t> index_;
};

using EffectiveBasis = Basis<EffectiveBasisState>;
using FullBasis = Basis<FullBasisState>;

// Lexicographic over (s1, n1, s2, n2).
EffectiveBasis enumerate_effective_basis(int n_excitations);
// Lexicographic over (e1, e2, n1, e3, e4, n2).
FullBasis enumerate_full_basis(int n_excitations);

SymMatrix build_effective_hamiltonian(const ModelParams& params, const EffectiveBasis& basis);
SymMatrix build_full_hamiltonian(const ModelParams& params, const FullBasis& basis);

// Column-orthonormal full_dim x effective_dim matrix V. Column k is the
// full-model image of effective state k, with each excited fictitious atom
// replaced by (|eg> + |ge>)/sqrt(2).
class Isometry {
 public:
  Isometry(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // V^T M V
  [[nodiscard]] SymMatrix pullback(const SymMatrix& m) const;
  // V^T x
  [[nodiscard]] std::vector<double> project(const std::vector<double>& full_vector) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

struct Embedding {
  // For each effective index: the (full index, amplitude) pairs of its image.
  std::vector<std::vector<std::pair<std::size_t, double>>> index_map;
  Isometry isometry;
};

Embedding symmetric_truncated_embedding(const FullBasis& full, const EffectiveBasis& effective);

}  // namespace jcdimer
