#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "tropvol/rational.hpp"

namespace tropvol {

/// An element of the min-plus semiring: a finite rational or +infinity.
/// Tropical addition is min, tropical multiplication is +; infinity is the
/// additive identity and absorbs under multiplication.
class TropScalar {
 public:
  /// Tropical zero, i.e. +infinity.
  TropScalar() = default;
  TropScalar(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)
  TropScalar(long value) : value_(Rational(value)) {}       // NOLINT(implicit)
  TropScalar(int value) : value_(Rational(value)) {}        // NOLINT(implicit)

  static TropScalar infinity() { return TropScalar(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_infinite() const noexcept { return !value_.has_value(); }

  /// Throws Error(InfiniteEntry) for infinity.
  const Rational& value() const;

  friend bool operator==(const TropScalar&, const TropScalar&) = default;
  /// Infinity compares greater than every finite value.
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

 private:
  std::optional<Rational> value_;
};

/// a ⊕ b = min(a, b)
TropScalar oplus(const TropScalar& a, const TropScalar& b);
/// a ⊙ b = a + b, saturating at infinity
TropScalar otimes(const TropScalar& a, const TropScalar& b);

std::string to_string(const TropScalar& s);

/// Dense row-major matrix over the min-plus semiring.
class TropMatrix {
 public:
  TropMatrix() = default;
  /// Filled with infinity.
  TropMatrix(std::size_t rows, std::size_t cols);
  TropMatrix(std::size_t rows, std::size_t cols, std::vector<TropScalar> entries);
  TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows);

  /// 0 on the diagonal, infinity elsewhere.
  static TropMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool all_finite() const;

  TropScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const TropScalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<TropScalar> column(std::size_t c) const;
  std::vector<TropScalar> row(std::size_t r) const;
  /// Copy with column c removed.
  TropMatrix without_column(std::size_t c) const;

  friend bool operator==(const TropMatrix&, const TropMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<TropScalar> data_;
};

/// Entrywise ⊕.
TropMatrix oplus(const TropMatrix& a, const TropMatrix& b);

/// Min-plus product: (a ⊙ b)(i,k) = min_j a(i,j) + b(j,k).
/// Throws DimensionMismatch when a.cols() != b.rows().
TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b);

/// Kleene star I ⊕ A ⊕ A^2 ⊕ ... ⊕ A^(n-1), computed by Floyd-Warshall.
/// Throws NegativeCycle if the closure has a negative diagonal entry.
TropMatrix kleene_star(const TropMatrix& a);

/// Zero diagonal and a(i,k) + a(k,j) >= a(i,j) for all triples, all entries finite.
bool is_kleene_star(const TropMatrix& a);
/// First violated property in human-readable form, or nullopt for a Kleene star.
std::optional<std::string> kleene_star_violation(const TropMatrix& a);

inline constexpr std::size_t kDefaultTdetLimit = 10;

/// Tropical determinant: min over permutations s of sum_i a(i, s(i)), i.e. the
/// min-plus permanent. It equals the optimal value of the linear assignment
/// problem on a, so an assignment solver could replace the enumeration for
/// large n; at the sizes used here (n <= d + 1) brute force is exact and cheap.
/// Throws SizeLimitExceeded when n > limit.
TropScalar tdet_min(const TropMatrix& a, std::size_t limit = kDefaultTdetLimit);

/// Subtracts the last-row entry from every column so the last row becomes 0.
/// Throws InfiniteEntry when the last row has an infinite entry.
TropMatrix canonical_projection(const TropMatrix& v);

/// A point of tropical projective space: coordinates modulo a global constant.
class HomogeneousPoint {
 public:
  /// Throws InvalidArgument when empty or all coordinates are infinite.
  explicit HomogeneousPoint(std::vector<TropScalar> coords);
  /// Lifts an affine point x in R^d to (x, 0).
  static HomogeneousPoint lift(const std::vector<Rational>& affine);

  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<TropScalar>& coords() const noexcept { return coords_; }
  const TropScalar& operator[](std::size_t i) const { return coords_[i]; }

  bool is_finite() const;
  /// Affine chart x_last = 0: (x_1 - x_last, ..., x_{n-1} - x_last).
  /// Requires a finite last coordinate.
  std::vector<Rational> project() const;

  /// Equal iff both have the same infinite pattern and the finite coordinates
  /// differ by one global constant.
  friend bool operator==(const HomogeneousPoint& a, const HomogeneousPoint& b);

 private:
  std::vector<TropScalar> coords_;
};

}  // namespace tropvol
