#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "tropvol/polytrope.hpp"
#include "tropvol/rational.hpp"
#include "tropvol/tropical.hpp"

namespace tropvol {

/// Weakly increasing sequence of d tropical vertex indices (0-based).
struct MultiIndex {
  std::vector<std::size_t> entries;

  /// Number of occurrences of vertex k.
  std::size_t count(std::size_t k) const;
  /// 1-based, e.g. "(1,1,3)".
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Ordered pair (i, j) naming the half-space x_i - x_j <= star(i, j).
struct FacetPair {
  std::size_t i = 0;
  std::size_t j = 0;

  std::vector<int> normal(std::size_t dim) const;

  friend auto operator<=>(const FacetPair&, const FacetPair&) = default;
};

struct Pseudovertex {
  std::vector<Rational> point;
  /// Multi-indices whose Cramer point is this point, in lexicographic order.
  std::vector<MultiIndex> generators;
  /// Tight half-spaces, in hrep order.
  std::vector<FacetPair> tight;
};

/// All C(2d, d) multi-indices of length d over {0..d}, lexicographic.
std::vector<MultiIndex> multi_indices(std::size_t dim);

/// Binomial coefficient C(2d, d).
std::size_t central_binomial(std::size_t dim);

/// Min-convention tropical Cramer vector of a d x (d+1) matrix: coordinate k
/// is tdet of the matrix with column k removed.
HomogeneousPoint tropical_cramer(const TropMatrix& rows);

/// Negated Cramer vector of the stacked vertex rows v_{i_1}, ..., v_{i_d},
/// projected to R^d.
std::vector<Rational> cramer_point(const Polytrope& p, const MultiIndex& index);

/// Cramer points for every multi-index, with identical points merged.
/// Ordered by first generator. Throws Internal if a point lies outside p.
std::vector<Pseudovertex> enumerate_pseudovertices(const Polytrope& p);

/// Half-spaces of p tight at v, in hrep order.
std::vector<FacetPair> active_facets(const Polytrope& p, const std::vector<Rational>& v);

/// All C(2d, d) Cramer points are pairwise distinct.
bool is_maximal(const Polytrope& p);

/// Every pseudovertex has exactly d tight half-spaces with linearly
/// independent normals.
bool is_simple(const Polytrope& p);
bool is_simple(const Polytrope& p, const std::vector<Pseudovertex>& vertices);

}  // namespace tropvol
