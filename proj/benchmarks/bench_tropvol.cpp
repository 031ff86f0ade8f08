#include <benchmark/benchmark.h>

#include <random>

#include "tropvol/oracle.hpp"
#include "tropvol/pseudovertex.hpp"
#include "tropvol/volume.hpp"

namespace {

using namespace tropvol;

TropMatrix random_square(std::size_t n, std::uint64_t seed, long lo, long hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(lo, hi);
  std::vector<TropScalar> data;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) data.emplace_back(r == c ? 0 : entry(rng));
  }
  return TropMatrix(n, n, std::move(data));
}

// Entries in [500, 1000] already satisfy the triangle inequality, and generic
// values give a maximal, simple polytrope.
Polytrope generated(std::size_t dim) { return Polytrope::from_star(random_square(dim + 1, 7, 500, 1000)); }

void BM_KleeneStar(benchmark::State& state) {
  const TropMatrix a = random_square(static_cast<std::size_t>(state.range(0)), 3, 0, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(kleene_star(a));
}
BENCHMARK(BM_KleeneStar)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumeratePseudovertices(benchmark::State& state) {
  const Polytrope p = generated(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pseudovertices(p));
}
BENCHMARK(BM_EnumeratePseudovertices)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_ComputeVolume(benchmark::State& state) {
  const Polytrope p = generated(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_volume(p));
}
BENCHMARK(BM_ComputeVolume)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MonteCarlo(benchmark::State& state) {
  const Polytrope p = generated(4);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_volume(p, samples, 11));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * samples));
}
BENCHMARK(BM_MonteCarlo)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
