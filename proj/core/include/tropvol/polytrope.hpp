#pragma once

#include <cstddef>
#include <vector>

#include "tropvol/rational.hpp"
#include "tropvol/tropical.hpp"

namespace tropvol {

/// The constraint x_i - x_j <= bound in homogeneous coordinates with the
/// last coordinate fixed to 0. Indices are 0-based over 0..d.
struct HalfSpace {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational bound;

  /// e_i - e_j with the last coordinate dropped; entries in {-1, 0, 1}.
  std::vector<int> normal(std::size_t dim) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// A full tropical polytope that is also classically convex, held as its
/// (d+1)x(d+1) Kleene star matrix. Column k is the k-th tropical vertex in
/// homogeneous coordinates; the polytrope is {x : x_i - x_j <= star(i,j)}.
class Polytrope {
 public:
  /// Validates a Kleene star (finite, zero diagonal, triangle inequality).
  /// Throws NotKleeneStar / DimensionMismatch otherwise.
  static Polytrope from_star(TropMatrix star);

  /// Maximal cell of the tropical convex hull of the columns of v:
  /// kleene_star(canonical_projection(v)). Column k should be the vertex
  /// extreme in direction -e_k. Throws NegativeCycle / InfiniteEntry.
  static Polytrope from_points(const TropMatrix& v);

  std::size_t dim() const noexcept { return dim_; }
  const TropMatrix& star() const noexcept { return star_; }
  /// star(i, j) as a rational.
  const Rational& bound(std::size_t i, std::size_t j) const { return star_(i, j).value(); }

  /// d(d+1) half-spaces, one per ordered pair, grouped by star column j:
  /// within a group the rows ascend, with the diagonal slot taken by the
  /// last coordinate.
  const std::vector<HalfSpace>& hrep() const noexcept { return hrep_; }

  /// Tropical vertex k projected to R^d.
  std::vector<Rational> vertex(std::size_t k) const;
  /// Tropical vertex k in homogeneous coordinates with last coordinate 0.
  std::vector<Rational> homogeneous_vertex(std::size_t k) const;

  friend bool operator==(const Polytrope& a, const Polytrope& b) { return a.star_ == b.star_; }

 private:
  Polytrope(std::size_t dim, TropMatrix star);

  std::size_t dim_ = 0;
  TropMatrix star_;
  std::vector<HalfSpace> hrep_;
};

/// Exact membership of x in R^d.
bool contains(const Polytrope& p, const std::vector<Rational>& x);

/// True iff star(i,j) + star(j,i) == 0 for some i != j (zero width).
bool is_degenerate(const Polytrope& p);

/// Breakpoints of the tropical segment between x and y, projected to R^d.
/// The first point is x, the last is y, and consecutive duplicates are
/// dropped, so a segment has between 1 and d+1 points.
std::vector<std::vector<Rational>> tropical_segment(const HomogeneousPoint& x,
                                                    const HomogeneousPoint& y);

}  // namespace tropvol
