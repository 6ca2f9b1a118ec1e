#pragma once

#include <cstddef>
#include <vector>

#include "jcdimer/sym_matrix.hpp"

namespace jcdimer {

struct Spectrum {
  std::vector<double> eigenvalues;                // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[k] belongs to eigenvalues[k]
  double residual_norm = 0.0;                     // max_k |H v_k - lambda_k v_k|
  int sweeps = 0;

  [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
};

struct EigenOptions {
  // Convergence when the off-diagonal Frobenius norm drops below
  // off_diagonal_tol * max(1, ||H||_F).
  double off_diagonal_tol = 1e-12;
  int max_sweeps = 100;
  // Post-check on max_k |H v_k - lambda_k v_k|, same relative scaling.
  double residual_tol = 1e-10;
};

// Cyclic Jacobi eigendecomposition. Throws ContractViolation on non-symmetric
// input and NumericalError when the sweep budget or residual check fails.
Spectrum eigen_decompose(const SymMatrix& m, const EigenOptions& options = {});

struct GroundState {
  double energy = 0.0;
  std::vector<double> vector;
  bool degenerate = false;
  double gap = 0.0;  // to the next eigenvalue, +inf for a 1x1 spectrum
};

// Lowest eigenpair. The vector is sign-fixed so that its largest-magnitude
// component (first one on ties) is positive.
GroundState ground_state(const Spectrum& s, double degeneracy_tol = 1e-9);

// Flips v in place so that its largest-magnitude component is positive.
void fix_sign(std::vector<double>& v);

}  // namespace jcdimer
