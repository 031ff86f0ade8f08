#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tropvol/polytrope.hpp"
#include "tropvol/pseudovertex.hpp"
#include "tropvol/rational.hpp"

namespace tropvol {

enum class ObjectiveKind { Ones, Powers, Random, Custom };

std::string_view to_string(ObjectiveKind kind);

/// Affine objective f(x) = c.x + offset.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::Custom;
  std::vector<Integer> c;
  Integer offset = 0;

  /// c = (1, ..., 1)
  static Objective ones(std::size_t dim);
  /// c = (1, M, M^2, ..., M^(d-1)) with M = 1 + 2 (ceil(max |star(i,j)|) + 1).
  static Objective powers(const Polytrope& p);
  /// Nonzero integer vector with entries in [-1000, 1000], deterministic in
  /// (seed, attempt).
  static Objective random(std::size_t dim, std::uint64_t seed, unsigned attempt);
  /// Throws InvalidArgument when c is empty or zero.
  static Objective custom(std::vector<Integer> c, Integer offset = 0);

  Rational evaluate(const std::vector<Rational>& x) const;
};

/// One summand of the vertex formula:
/// term = f(v)^d / (d! * delta * gamma_1 * ... * gamma_d).
struct VertexTerm {
  Pseudovertex vertex;
  Rational f_value;
  std::vector<Integer> gammas;
  Integer delta;
  Rational term;
};

/// normals are the d facet normals tight at v; gammas are the coefficients of
/// c in that basis, listed in the same order. Throws ZeroGamma when some
/// gamma vanishes and NotUnimodular when |det| != 1.
VertexTerm vertex_term(const Pseudovertex& v, std::span<const std::vector<int>> normals,
                       const Objective& objective, std::size_t dim);

struct ObjectivePolicy {
  /// First rung of the ladder: Ones -> Powers -> Random(seed, 0..n-1).
  /// Starting at Powers skips Ones; starting at Random uses only random draws.
  ObjectiveKind first = ObjectiveKind::Ones;
  std::uint64_t seed = 0;
  unsigned random_attempts = 8;
};

struct VolumeDiagnostics {
  std::size_t multi_indices = 0;
  std::size_t pseudovertices = 0;
  std::size_t duplicates_merged = 0;
  std::size_t objective_retries = 0;
  bool degenerate = false;
};

struct VolumeReport {
  std::vector<VertexTerm> terms;
  Rational total;
  Objective objective;
  VolumeDiagnostics diagnostics;
};

/// Exact volume by summing vertex terms over the pseudovertices of p.
/// Degenerate polytropes short-circuit to 0. Throws NonSimple if a vertex has
/// other than d tight half-spaces, ObjectiveExhausted if every objective on
/// the ladder hits a zero gamma.
VolumeReport compute_volume(const Polytrope& p, const ObjectivePolicy& policy = {});

/// Same, with a single fixed objective; a zero gamma throws ZeroGamma.
VolumeReport compute_volume(const Polytrope& p, const Objective& objective);

}  // namespace tropvol
