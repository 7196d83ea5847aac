#include <benchmark/benchmark.h>

#include <random>

#include "../tests/common/generators.hpp"
#include "slotmarket/bmatch.hpp"
#include "slotmarket/equilibrium.hpp"

using namespace slotmarket;
namespace tt = slotmarket::testing;

namespace {

Instance day_instance(int num_slots) {
  std::mt19937_64 rng(tt::test_seed());
  const int capacity = 12;
  const int num_flights = num_slots * capacity * 7 / 8;
  return tt::rush_instance(rng, num_slots, num_flights, capacity, 12, 12, 30);
}

void BM_solve(benchmark::State& state) {
  Instance inst = day_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_min_bmatching(inst));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(inst.flights.size()));
}
BENCHMARK(BM_solve)->Arg(24)->Arg(96)->Arg(288);

void BM_minimum_prices(benchmark::State& state) {
  Instance inst = day_instance(static_cast<int>(state.range(0)));
  BMatchResult result = solve_min_bmatching(inst);
  PriceVector raw = extract_prices(result.duals);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimum_prices(inst, result.schedule, raw));
  }
}
BENCHMARK(BM_minimum_prices)->Arg(24)->Arg(96);

void BM_clear_market(benchmark::State& state) {
  Instance inst = day_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(clear_market(inst, PriceSelection::Minimum));
  }
}
BENCHMARK(BM_clear_market)->Arg(24)->Arg(96);

}  // namespace

BENCHMARK_MAIN();
