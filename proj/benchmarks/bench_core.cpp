// Microbenchmarks for the hot paths: cross-set construction, the two
// distance evaluations, exact q, the closed-form spectrum, and the exact
// family search. Distances dominate the brute-force suites, so their
// per-pair cost is what bounds the reachable k.

#include "kk/bounds.hpp"
#include "kk/construction.hpp"
#include "kk/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace kk;

void BM_CrossSet(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const Params p = make_params(k);
  const std::vector<Block> blocks = all_blocks(p);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_set(blocks[i], p));
    if (++i == blocks.size()) i = 0;
  }
}
BENCHMARK(BM_CrossSet)->Arg(2)->Arg(3)->Arg(4);

void BM_DistSqDirect(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const PointSet ps = enumerate_points(make_params(k));
  std::size_t i = 0, j = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist_sq_direct(ps.points[i], ps.points[j]));
    if (++j == ps.points.size()) {
      j = 0;
      if (++i == ps.points.size()) i = 0;
    }
  }
}
BENCHMARK(BM_DistSqDirect)->Arg(2)->Arg(3)->Arg(4);

void BM_DistSqClosedFromBlocks(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const Params p = make_params(k);
  const std::vector<Block> blocks = all_blocks(p);
  std::size_t i = 0, j = 1;
  for (auto _ : state) {
    const std::uint64_t overlap = intersection_size(blocks[i], blocks[j]);
    benchmark::DoNotOptimize(dist_sq_closed(k, overlap));
    if (++j == blocks.size()) {
      j = 0;
      if (++i == blocks.size()) i = 0;
    }
  }
}
BENCHMARK(BM_DistSqClosedFromBlocks)->Arg(2)->Arg(3)->Arg(4);

void BM_QExact(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(q_exact(k));
  }
}
BENCHMARK(BM_QExact)->Arg(13)->Arg(64)->Arg(512)->Arg(4096);

void BM_SpectrumAnalytic(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_analytic(k));
  }
}
BENCHMARK(BM_SpectrumAnalytic)->Arg(3)->Arg(16)->Arg(64);

void BM_SpectrumBruteforce(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum_bruteforce(k));
  }
}
BENCHMARK(BM_SpectrumBruteforce)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ConflictGraphBuild(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  const Params p = make_params(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConflictGraph::build(p, k));
  }
}
BENCHMARK(BM_ConflictGraphBuild)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ExactFamilySearch(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_conflict_free_family(k));
  }
}
BENCHMARK(BM_ExactFamilySearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentities(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_identities(k));
  }
}
BENCHMARK(BM_VerifyIdentities)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
