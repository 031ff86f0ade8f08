#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropvol/polytrope.hpp"
#include "tropvol/rational.hpp"

namespace tropvol {

// Independent volume checks that do not use the vertex formula.

/// Indices of 2d points in counter-clockwise order around their centroid,
/// compared by exact cross-product signs.
std::vector<std::size_t> convex_polygon_order(const std::vector<std::vector<Rational>>& points);

/// Exact volume for d = 2 (shoelace over angularly sorted pseudovertices) and
/// d = 3 (facet fans coned from the centroid). Works for non-simple input.
/// Throws UnsupportedDimension for other d.
Rational exact_volume_low_dim(const Polytrope& p);

struct McEstimate {
  /// hits / samples * box volume, exact.
  Rational estimate;
  /// box volume * sqrt(p (1 - p) / samples); floating point.
  double stderr_estimate = 0.0;
  std::size_t samples = 0;
  std::size_t hits = 0;
  std::uint64_t seed = 0;
  /// Per-axis [min, max] from the half-spaces (i, d) and (d, i).
  std::vector<std::pair<Rational, Rational>> box;
  Rational box_volume;
};

/// Uniform samples in the bounding box with coordinates on a 2^-32 grid of
/// each axis, tested exactly for membership. Deterministic in (p, samples,
/// seed) regardless of threads. Requires samples >= 1000.
McEstimate monte_carlo_volume(const Polytrope& p, std::size_t samples, std::uint64_t seed,
                              unsigned threads = 1);

struct CrossCheckOptions {
  std::size_t samples = 200000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct CrossCheckReport {
  std::size_t dim = 0;
  /// compute_volume under the default ladder and under the powers objective.
  Rational volume_default;
  Rational volume_alternate;
  std::optional<Rational> exact_oracle;
  std::optional<McEstimate> monte_carlo;
  bool objectives_agree = false;
  bool oracle_agrees = true;
  /// Set when the Monte Carlo estimate is more than 3 standard errors away.
  bool mc_warning = false;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Volume under the default and powers objectives, plus the exact oracle
/// (d = 2, 3) or a Monte Carlo estimate (other d). Monte Carlo disagreement
/// only warns.
CrossCheckReport cross_check(const Polytrope& p, const CrossCheckOptions& options = {});

}  // namespace tropvol
