#include "tropvol/tropical.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <sstream>

#include "tropvol/error.hpp"

namespace tropvol {

namespace {

constexpr std::string_view kModule = "trop_core";

// Integer entries small enough that any permutation sum fits in int64.
std::optional<std::vector<std::int64_t>> small_integers(const TropMatrix& a) {
  constexpr std::int64_t kBound = std::int64_t{1} << 56;
  std::vector<std::int64_t> out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const TropScalar& e = a(r, c);
      if (e.is_infinite()) return std::nullopt;
      const Rational& v = e.value();
      if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
      const Integer& n = boost::multiprecision::numerator(v);
      if (n >= kBound || n <= -kBound) return std::nullopt;
      out.push_back(n.convert_to<std::int64_t>());
    }
  }
  return out;
}

}  // namespace

const Rational& TropScalar::value() const {
  if (!value_) throw Error(ErrorCode::InfiniteEntry, kModule, "value of tropical infinity");
  return *value_;
}

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() <=> b.is_infinite();
  }
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*b.value_ < *a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

TropScalar oplus(const TropScalar& a, const TropScalar& b) { return b < a ? b : a; }

TropScalar otimes(const TropScalar& a, const TropScalar& b) {
  if (a.is_infinite() || b.is_infinite()) return TropScalar::infinity();
  return TropScalar(Rational(a.value() + b.value()));
}

std::string to_string(const TropScalar& s) {
  return s.is_infinite() ? std::string("inf") : to_display_string(s.value());
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, std::vector<TropScalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "entry count differs from rows * cols");
  }
}

TropMatrix::TropMatrix(std::initializer_list<std::initializer_list<TropScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, kModule, "ragged matrix initializer");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::identity(std::size_t n) {
  TropMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = TropScalar(0);
  return m;
}

bool TropMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const TropScalar& s) { return s.is_finite(); });
}

std::vector<TropScalar> TropMatrix::column(std::size_t c) const {
  std::vector<TropScalar> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<TropScalar> TropMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

TropMatrix TropMatrix::without_column(std::size_t c) const {
  TropMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0, o = 0; k < cols_; ++k) {
      if (k != c) out(r, o++) = (*this)(r, k);
    }
  }
  return out;
}

TropMatrix oplus(const TropMatrix& a, const TropMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "oplus of differently shaped matrices");
  }
  TropMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = oplus(a(i, j), b(i, j));
  }
  return out;
}

TropMatrix trop_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream msg;
    msg << "cannot multiply " << a.rows() << "x" << a.cols() << " by " << b.rows() << "x"
        << b.cols();
    throw Error(ErrorCode::DimensionMismatch, kModule, msg.str());
  }
  TropMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < b.cols(); ++k) {
      TropScalar acc = TropScalar::infinity();
      for (std::size_t j = 0; j < a.cols(); ++j) acc = oplus(acc, otimes(a(i, j), b(j, k)));
      out(i, k) = std::move(acc);
    }
  }
  return out;
}

TropMatrix kleene_star(const TropMatrix& a) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, kModule, "Kleene star of a non-square matrix");
  const std::size_t n = a.rows();
  TropMatrix b = oplus(TropMatrix::identity(n), a);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (b(i, k).is_infinite()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        TropScalar via = otimes(b(i, k), b(k, j));
        if (via < b(i, j)) b(i, j) = std::move(via);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (b(i, i) < TropScalar(0)) {
      throw Error(ErrorCode::NegativeCycle, kModule,
                  "negative cycle through index " + std::to_string(i + 1));
    }
  }
  return b;
}

std::optional<std::string> kleene_star_violation(const TropMatrix& a) {
  if (!a.square()) return "matrix is not square";
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_infinite()) {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is infinite";
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, i).value() != 0) {
      return "diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
             ") is " + to_string(a(i, i)) + ", not 0";
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, k).value() + a(k, j).value() < a(i, j).value()) {
          return "a(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ") + a(" +
                 std::to_string(k + 1) + "," + std::to_string(j + 1) + ") < a(" +
                 std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

bool is_kleene_star(const TropMatrix& a) { return !kleene_star_violation(a).has_value(); }

TropScalar tdet_min(const TropMatrix& a, std::size_t limit) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, kModule, "tdet of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > limit) {
    throw Error(ErrorCode::SizeLimitExceeded, kModule,
                "tdet enumeration limited to n <= " + std::to_string(limit) + ", got " +
                    std::to_string(n));
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  if (n == 0) return TropScalar(0);

  if (const auto fast = small_integers(a)) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += (*fast)[i * n + perm[i]];
      best = std::min(best, sum);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return TropScalar(Rational(best));
  }

  TropScalar best = TropScalar::infinity();
  do {
    Rational sum = 0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      const TropScalar& e = a(i, perm[i]);
      if (e.is_infinite()) {
        finite = false;
        break;
      }
      sum += e.value();
    }
    if (finite && (best.is_infinite() || sum < best.value())) best = TropScalar(std::move(sum));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

TropMatrix canonical_projection(const TropMatrix& v) {
  if (v.rows() == 0) throw Error(ErrorCode::DimensionMismatch, kModule, "projection of an empty matrix");
  const std::size_t last = v.rows() - 1;
  TropMatrix out = v;
  for (std::size_t c = 0; c < v.cols(); ++c) {
    if (v(last, c).is_infinite()) {
      throw Error(ErrorCode::InfiniteEntry, kModule,
                  "last row entry of column " + std::to_string(c + 1) + " is infinite");
    }
    const Rational shift = v(last, c).value();
    for (std::size_t r = 0; r < v.rows(); ++r) {
      if (v(r, c).is_finite()) out(r, c) = TropScalar(Rational(v(r, c).value() - shift));
    }
  }
  return out;
}

HomogeneousPoint::HomogeneousPoint(std::vector<TropScalar> coords) : coords_(std::move(coords)) {
  if (std::none_of(coords_.begin(), coords_.end(),
                   [](const TropScalar& s) { return s.is_finite(); })) {
    throw Error(ErrorCode::InvalidArgument, kModule, "homogeneous point needs a finite coordinate");
  }
}

HomogeneousPoint HomogeneousPoint::lift(const std::vector<Rational>& affine) {
  std::vector<TropScalar> coords(affine.begin(), affine.end());
  coords.emplace_back(0);
  return HomogeneousPoint(std::move(coords));
}

bool HomogeneousPoint::is_finite() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const TropScalar& s) { return s.is_finite(); });
}

std::vector<Rational> HomogeneousPoint::project() const {
  const Rational& base = coords_.back().value();
  std::vector<Rational> out;
  out.reserve(coords_.size() - 1);
  for (std::size_t i = 0; i + 1 < coords_.size(); ++i) out.emplace_back(coords_[i].value() - base);
  return out;
}

bool operator==(const HomogeneousPoint& a, const HomogeneousPoint& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> offset;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_infinite() != b[i].is_infinite()) return false;
    if (a[i].is_infinite()) continue;
    Rational diff = a[i].value() - b[i].value();
    if (!offset) {
      offset = std::move(diff);
    } else if (diff != *offset) {
      return false;
    }
  }
  return true;
}

}  // namespace tropvol
