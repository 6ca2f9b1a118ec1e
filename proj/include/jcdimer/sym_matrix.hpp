#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace jcdimer {

// Dense real symmetric matrix, row-major. set() writes both triangles so the
// stored transpose is bit-identical.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

  // Throws ContractViolation if rows are ragged or the input is not exactly symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] = v;
    data_[j * dim_ + i] = v;
  }
  void add(std::size_t i, std::size_t j, double v) {
    data_[i * dim_ + j] += v;
    if (i != j) data_[j * dim_ + i] += v;
  }

  [[nodiscard]] std::span<const double> data() const { return data_; }
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] std::vector<double> multiply(std::span<const double> x) const;
  [[nodiscard]] double max_abs_difference(const SymMatrix& other) const;

  bool operator==(const SymMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

}  // namespace jcdimer
