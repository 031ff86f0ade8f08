#include "tropvol/exact.hpp"

#include <utility>

#include "tropvol/error.hpp"

namespace tropvol {

namespace {
constexpr std::string_view kModule = "exact_num";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, kModule, "ragged IntMatrix initializer");
    }
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_columns(std::span<const std::vector<Integer>> columns) {
  const std::size_t n = columns.size();
  IntMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, kModule, "column length differs from column count");
    }
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Integer> IntMatrix::operator*(std::span<const Integer> x) const {
  if (x.size() != cols_) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "matrix-vector size mismatch");
  }
  std::vector<Integer> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] += (*this)(r, c) * x[c];
  }
  return y;
}

Integer det_exact(const IntMatrix& a) {
  if (!a.square()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "determinant of a non-square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;

  // Bareiss: after step k every entry below/right of the pivot is a k+1 minor,
  // so each division is exact.
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev_pivot;
      }
      m(i, k) = 0;
    }
    prev_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<Integer> solve_unimodular(const IntMatrix& a, std::span<const Integer> c) {
  if (!a.square() || c.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "solve needs a square matrix and matching rhs");
  }
  const Integer det = det_exact(a);
  if (det == 0) throw Error(ErrorCode::Singular, kModule, "singular normal matrix");
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, kModule, "normal matrix has |det| = " + Integer(abs(det)).str());
  }

  const std::size_t n = a.rows();
  std::vector<Integer> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix replaced = a;
    for (std::size_t r = 0; r < n; ++r) replaced(r, k) = c[r];
    x[k] = det_exact(replaced) * det;  // det is its own inverse
  }
  if (a * std::span<const Integer>(x) != std::vector<Integer>(c.begin(), c.end())) {
    throw Error(ErrorCode::Internal, kModule, "unimodular solve failed to reproduce rhs");
  }
  return x;
}

}  // namespace tropvol
