#include <benchmark/benchmark.h>

#include "coop/random.hpp"
#include "coop/solutions.hpp"

namespace {

template <coop::PayoffVector (*F)(const coop::Game&)>
void BM_Shapley(benchmark::State& state) {
  const coop::Game v = coop::GameSampler(2).game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(F(v));
}

BENCHMARK(BM_Shapley<coop::shapley>)->Name("shapley/marginals")->DenseRange(3, 12, 3);
BENCHMARK(BM_Shapley<coop::shapley_by_dividends>)->Name("shapley/dividends")->DenseRange(3, 12, 3);
BENCHMARK(BM_Shapley<coop::shapley_oracle>)->Name("shapley/orders")->DenseRange(3, 8, 1);

}  // namespace
