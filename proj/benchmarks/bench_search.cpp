#include <benchmark/benchmark.h>

#include "coop/search.hpp"

namespace {

void BM_ExhaustiveSingleGame(benchmark::State& state) {
  coop::ExhaustiveStrategy s;
  s.threads = 1;
  std::uint64_t instances = 0;
  for (auto _ : state) {
    const auto v = coop::search_counterexample(coop::AxiomId::null_player_property, coop::SolutionSpec::shapley(), s);
    instances += std::get<coop::Passed>(v).instances_checked;
  }
  state.counters["instances/s"] = benchmark::Counter(static_cast<double>(instances), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ExhaustiveSingleGame)->Unit(benchmark::kMillisecond);

void BM_ExhaustivePairs(benchmark::State& state) {
  coop::ExhaustiveStrategy s;
  s.grid = {-1, 0, 1};
  s.threads = 1;
  std::uint64_t instances = 0;
  for (auto _ : state) {
    const auto v = coop::search_counterexample(coop::AxiomId::linearity, coop::SolutionSpec::shapley(), s);
    instances += std::get<coop::Passed>(v).instances_checked;
  }
  state.counters["instances/s"] = benchmark::Counter(static_cast<double>(instances), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_ExhaustivePairs)->Unit(benchmark::kMillisecond);

void BM_RandomTrials(benchmark::State& state) {
  const coop::RandomStrategy s{static_cast<int>(state.range(0)), 1000, 42};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coop::search_counterexample(coop::AxiomId::null_player_neutrality, coop::SolutionSpec::egalitarian(coop::Rat(1, 2)), s));
  }
}
BENCHMARK(BM_RandomTrials)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
