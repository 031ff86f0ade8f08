#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropvol/rational.hpp"

namespace tropvol {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Builds a square matrix whose k-th column is columns[k].
  static IntMatrix from_columns(std::span<const std::vector<Integer>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<Integer> operator*(std::span<const Integer> x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. The 0x0 determinant is 1.
Integer det_exact(const IntMatrix& a);

/// Solves a * x = c for a square matrix with |det a| = 1. The solution is
/// integral; each component is det(a with column k replaced by c) / det(a).
/// Throws Singular when det a = 0 and NotUnimodular when |det a| > 1.
std::vector<Integer> solve_unimodular(const IntMatrix& a, std::span<const Integer> c);

}  // namespace tropvol
