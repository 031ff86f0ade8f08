#pragma once

#include <cstddef>
#include <cstdint>

#include "tropvol/polytrope.hpp"

namespace tropvol {

struct GenConfig {
  std::size_t dim = 2;
  long entry_min = 0;
  long entry_max = 100;
  std::uint64_t seed = 0;
};

struct Generated {
  Polytrope polytrope;
  /// Draws rejected because of a negative cycle.
  unsigned retries = 0;
};

inline constexpr unsigned kGenerationRetryLimit = 64;

/// Draws d+1 homogeneous points with integer coordinates uniform in
/// [entry_min, entry_max] and last coordinate 0, then takes the Kleene star.
/// Draws with a negative cycle are rejected; when negative entries pull the
/// last star row below 0 the result is translated back so it is 0 again.
/// Throws InvalidArgument for a bad config and GenerationExhausted after
/// kGenerationRetryLimit rejections.
Generated generate(const GenConfig& cfg);

inline Polytrope random_polytrope(const GenConfig& cfg) { return generate(cfg).polytrope; }

}  // namespace tropvol
