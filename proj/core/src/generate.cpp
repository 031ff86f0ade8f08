#include "tropvol/generate.hpp"

#include <random>

#include <boost/random/uniform_int_distribution.hpp>

#include "tropvol/error.hpp"

namespace tropvol {

namespace {

constexpr std::string_view kModule = "gen";

// Translating the polytrope by t (t_d = 0) maps star(i, j) to
// star(i, j) + t_i - t_j; t_j = star(d, j) zeroes the last row and keeps the
// diagonal and every triangle inequality.
TropMatrix zero_last_row(TropMatrix star) {
  const std::size_t n = star.rows();
  const std::size_t last = n - 1;
  std::vector<Rational> shift;
  for (std::size_t j = 0; j < n; ++j) shift.push_back(star(last, j).value());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      star(i, j) = TropScalar(Rational(star(i, j).value() + shift[i] - shift[j]));
    }
  }
  return star;
}

}  // namespace

Generated generate(const GenConfig& cfg) {
  if (cfg.dim < 1) throw Error(ErrorCode::InvalidArgument, kModule, "dimension must be at least 1");
  if (cfg.entry_min > cfg.entry_max) {
    throw Error(ErrorCode::InvalidArgument, kModule, "entry_min exceeds entry_max");
  }
  const std::size_t n = cfg.dim + 1;
  std::mt19937_64 engine(cfg.seed);
  boost::random::uniform_int_distribution<long> dist(cfg.entry_min, cfg.entry_max);

  for (unsigned attempt = 0; attempt <= kGenerationRetryLimit; ++attempt) {
    TropMatrix points(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) points(i, j) = TropScalar(i + 1 == n ? 0L : dist(engine));
    }
    try {
      TropMatrix star = zero_last_row(kleene_star(canonical_projection(points)));
      return Generated{Polytrope::from_star(std::move(star)), attempt};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NegativeCycle) throw;
    }
  }
  throw Error(ErrorCode::GenerationExhausted, kModule,
              "no draw without a negative cycle after " + std::to_string(kGenerationRetryLimit + 1) +
                  " attempts");
}

}  // namespace tropvol
