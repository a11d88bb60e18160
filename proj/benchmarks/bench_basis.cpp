#include <benchmark/benchmark.h>

#include "coop/basis.hpp"
#include "coop/random.hpp"

namespace {

void BM_ToDividends(benchmark::State& state) {
  const coop::Game v = coop::GameSampler(1).game(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coop::to_coefficients(v, coop::Basis::unanimity));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToDividends)->DenseRange(4, 14, 2);

void BM_FromDividends(benchmark::State& state) {
  const auto c = coop::to_coefficients(coop::GameSampler(1).game(static_cast<int>(state.range(0))), coop::Basis::unanimity);
  for (auto _ : state) benchmark::DoNotOptimize(coop::from_coefficients(c));
}
BENCHMARK(BM_FromDividends)->DenseRange(4, 14, 2);

}  // namespace
