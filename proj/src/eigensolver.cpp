#include "jcdimer/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "jcdimer/errors.hpp"

namespace jcdimer {

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ContractViolation("SymMatrix::from_rows: matrix is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.data_[i * m.dim_ + j] = rows[i][j];
  }
  if (!m.is_symmetric()) throw ContractViolation("SymMatrix::from_rows: matrix is not symmetric");
  return m;
}

bool SymMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

std::vector<double> SymMatrix::multiply(std::span<const double> x) const {
  if (x.size() != dim_) throw ContractViolation("SymMatrix::multiply: dimension mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) acc += data_[i * dim_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

double SymMatrix::max_abs_difference(const SymMatrix& other) const {
  if (other.dim_ != dim_) throw ContractViolation("SymMatrix::max_abs_difference: dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  return worst;
}

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

Spectrum eigen_decompose(const SymMatrix& m, const EigenOptions& options) {
  if (!(options.off_diagonal_tol > 0.0) || options.max_sweeps < 1 || !(options.residual_tol > 0.0))
    throw ContractViolation("eigen_decompose: tolerances must be positive");
  if (!m.is_symmetric()) throw ContractViolation("eigen_decompose: input is not symmetric");
  const std::size_t n = m.dim();
  if (n == 0) throw ContractViolation("eigen_decompose: empty matrix");

  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v(n * n, 0.0);  // columns are eigenvectors
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double scale = std::max(1.0, m.frobenius_norm());
  const double target = options.off_diagonal_tol * scale;

  int sweep = 0;
  double off = off_diagonal_norm(a, n);
  while (off > target) {
    if (sweep == options.max_sweeps) {
      std::ostringstream msg;
      msg << "eigen_decompose: no convergence after " << sweep << " sweeps (dim " << n
          << ", off-diagonal norm " << off << ", target " << target << ")";
      throw NumericalError(msg.str());
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];

        // Rutishauser's stable form: t = tan of the rotation angle, |t| <= 1.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double nkp = c * akp - s * akq;
          const double nkq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = nkp;
          a[k * n + q] = a[q * n + k] = nkq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
    off = off_diagonal_norm(a, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] < a[j * n + j]; });

  Spectrum out;
  out.sweeps = sweep;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a[k * n + k]);
    std::vector<double> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.eigenvectors.push_back(std::move(col));
  }

  double residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const auto hv = m.multiply(out.eigenvectors[k]);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = hv[i] - out.eigenvalues[k] * out.eigenvectors[k][i];
      r2 += d * d;
    }
    residual = std::max(residual, std::sqrt(r2));
  }
  out.residual_norm = residual;
  if (!(residual <= options.residual_tol * scale)) {
    std::ostringstream msg;
    msg << "eigen_decompose: residual " << residual << " exceeds " << options.residual_tol * scale
        << " (dim " << n << ", " << sweep << " sweeps)";
    throw NumericalError(msg.str());
  }
  return out;
}

void fix_sign(std::vector<double>& v) {
  if (v.empty()) return;
  double biggest = 0.0;
  for (double x : v) biggest = std::max(biggest, std::abs(x));
  // First component within rounding of the maximum decides; keeps near-ties deterministic.
  const double cutoff = biggest * (1.0 - 1e-12);
  for (double x : v) {
    if (std::abs(x) >= cutoff) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

GroundState ground_state(const Spectrum& s, double degeneracy_tol) {
  if (s.eigenvalues.empty() || s.eigenvectors.size() != s.eigenvalues.size())
    throw ContractViolation("ground_state: empty or malformed spectrum");
  if (!(degeneracy_tol > 0.0)) throw ContractViolation("ground_state: degeneracy tolerance must be positive");

  GroundState gs;
  gs.energy = s.eigenvalues.front();
  gs.vector = s.eigenvectors.front();
  gs.gap = s.size() > 1 ? s.eigenvalues[1] - s.eigenvalues[0] : std::numeric_limits<double>::infinity();
  gs.degenerate = gs.gap < degeneracy_tol;
  fix_sign(gs.vector);
  return gs;
}

}  // namespace jcdimer
