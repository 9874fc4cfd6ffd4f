#include <benchmark/benchmark.h>

#include "matchbounds/bounds.hpp"
#include "matchbounds/config_model.hpp"
#include "matchbounds/girth_chromatic.hpp"
#include "matchbounds/oracle.hpp"
#include "matchbounds/perm_latin.hpp"

using namespace matchbounds;

namespace {

void BM_EnumeratePerfectMatchings(benchmark::State& state) {
  auto space = MatchingSpace::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    long long count = 0;
    for_each_perfect_matching(space, [&](const std::vector<int>&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePerfectMatchings)->Arg(10)->Arg(12)->Arg(14);

void BM_SampleAndGirth(benchmark::State& state) {
  auto dseq = DegreeSequence::regular(static_cast<int>(state.range(0)), 3);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    auto g = sample_multigraph(dseq, 42, trial++);
    benchmark::DoNotOptimize(girth_at_least(g, 4));
  }
}
BENCHMARK(BM_SampleAndGirth)->Arg(100)->Arg(1000);

void BM_CycleFamilyBracket(benchmark::State& state) {
  auto family = cycle_event_family(DegreeSequence::regular(static_cast<int>(state.range(0)), 3), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(family_lower_bound(family));
    auto sparse = delta_sparseness(family, std::nullopt);
    benchmark::DoNotOptimize(family_upper_bound(family, sparse.chosen_delta));
  }
}
BENCHMARK(BM_CycleFamilyBracket)->Arg(4)->Arg(6);

void BM_Permanent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::uint32_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = ((1u << n) - 1) & ~(1u << i); // J - I
  for (auto _ : state) benchmark::DoNotOptimize(permanent01(rows, n));
}
BENCHMARK(BM_Permanent)->Arg(6)->Arg(8)->Arg(12);

void BM_LatinTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(latin_count_table(n));
}
BENCHMARK(BM_LatinTable)->Arg(5)->Arg(6);

void BM_TraversalProbability(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int s = 0; s <= n; ++s) benchmark::DoNotOptimize(traversal_probability(n, s));
}
BENCHMARK(BM_TraversalProbability)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
