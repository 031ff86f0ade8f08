#include "tropvol/polytrope.hpp"

#include <algorithm>

#include "tropvol/error.hpp"

namespace tropvol {

namespace {

constexpr std::string_view kModule = "polytrope";

// Pair order of the displayed half-space system: column j of the star, rows
// ascending, the diagonal slot replaced by the last coordinate.
std::vector<std::pair<std::size_t, std::size_t>> hrep_pairs(std::size_t dim) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(dim * (dim + 1));
  for (std::size_t j = 0; j <= dim; ++j) {
    for (std::size_t slot = 0; slot < dim; ++slot) {
      pairs.emplace_back(slot == j ? dim : slot, j);
    }
  }
  return pairs;
}

}  // namespace

std::vector<int> HalfSpace::normal(std::size_t dim) const {
  std::vector<int> n(dim, 0);
  if (i < dim) n[i] += 1;
  if (j < dim) n[j] -= 1;
  return n;
}

Polytrope::Polytrope(std::size_t dim, TropMatrix star) : dim_(dim), star_(std::move(star)) {
  const std::size_t n = dim_ + 1;
  hrep_.reserve(dim_ * n);
  for (const auto& [i, j] : hrep_pairs(dim_)) {
    // b_ij is the largest value of x_i - x_j over the tropical vertices.
    Rational best = star_(i, 0).value() - star_(j, 0).value();
    for (std::size_t k = 1; k < n; ++k) {
      best = std::max(best, Rational(star_(i, k).value() - star_(j, k).value()));
    }
    if (best != star_(i, j).value()) {
      throw Error(ErrorCode::Internal, kModule, "vertex maximum differs from star entry");
    }
    hrep_.push_back(HalfSpace{i, j, std::move(best)});
  }
}

Polytrope Polytrope::from_star(TropMatrix star) {
  if (!star.square() || star.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, kModule,
                "polytrope needs a square matrix of size at least 2");
  }
  if (auto why = kleene_star_violation(star)) {
    throw Error(ErrorCode::NotKleeneStar, kModule, "not a Kleene star: " + *why);
  }
  const std::size_t dim = star.rows() - 1;
  return Polytrope(dim, std::move(star));
}

Polytrope Polytrope::from_points(const TropMatrix& v) {
  if (!v.square() || v.rows() < 2) {
    throw Error(ErrorCode::DimensionMismatch, kModule,
                "point matrix must be square of size at least 2");
  }
  TropMatrix star = kleene_star(canonical_projection(v));
  if (!star.all_finite()) {
    throw Error(ErrorCode::InfiniteEntry, kModule, "closure of the points is unbounded");
  }
  return from_star(std::move(star));
}

std::vector<Rational> Polytrope::vertex(std::size_t k) const {
  std::vector<Rational> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.emplace_back(star_(i, k).value() - star_(dim_, k).value());
  return out;
}

std::vector<Rational> Polytrope::homogeneous_vertex(std::size_t k) const {
  std::vector<Rational> out = vertex(k);
  out.emplace_back(0);
  return out;
}

bool contains(const Polytrope& p, const std::vector<Rational>& x) {
  const std::size_t d = p.dim();
  if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, kModule, "point dimension mismatch");
  static const Rational zero = 0;
  const auto coord = [&](std::size_t k) -> const Rational& { return k == d ? zero : x[k]; };
  Rational diff;
  return std::all_of(p.hrep().begin(), p.hrep().end(), [&](const HalfSpace& h) {
    diff = coord(h.i);
    diff -= coord(h.j);
    return diff <= h.bound;
  });
}

bool is_degenerate(const Polytrope& p) {
  const std::size_t n = p.dim() + 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.bound(i, j) + p.bound(j, i) == 0) return true;
    }
  }
  return false;
}

std::vector<std::vector<Rational>> tropical_segment(const HomogeneousPoint& x,
                                                    const HomogeneousPoint& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, kModule, "segment endpoints differ in size");
  }
  if (!x.is_finite() || !y.is_finite()) {
    throw Error(ErrorCode::InfiniteEntry, kModule, "segment endpoints must be finite");
  }
  const std::size_t n = x.size();
  std::vector<Rational> lambdas;
  lambdas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) lambdas.emplace_back(y[i].value() - x[i].value());
  std::sort(lambdas.begin(), lambdas.end());
  lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

  std::vector<std::vector<Rational>> points;
  for (const Rational& lambda : lambdas) {
    std::vector<TropScalar> z;
    z.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      z.emplace_back(std::min(Rational(lambda + x[i].value()), y[i].value()));
    }
    std::vector<Rational> projected = HomogeneousPoint(std::move(z)).project();
    if (points.empty() || points.back() != projected) points.push_back(std::move(projected));
  }
  return points;
}

}  // namespace tropvol
