#include <benchmark/benchmark.h>

#include "hyperprob/expsim.hpp"
#include "hyperprob/philox.hpp"

namespace {

using namespace hyperprob;

FiniteContextSpace hyp8() {
  using A = AOutcome;
  using B = BOutcome;
  return FiniteContextSpace(
      {{"w1", 0.10, A::a1, B::b1, {"C"}}, {"w2", 0.00, A::a1, B::b2, {"C"}},
       {"w3", 0.09, A::a2, B::b1, {"C"}}, {"w4", 0.01, A::a2, B::b2, {"C"}},
       {"w5", 0.30, A::a1, B::b1, {}},    {"w6", 0.10, A::a1, B::b2, {}},
       {"w7", 0.01, A::a2, B::b1, {}},    {"w8", 0.39, A::a2, B::b2, {}}},
      {"C"});
}

void BM_PhiloxBlock(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(philox_u64(42, PhiloxStream::draws, i++));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxBlock);

void BM_Sample(benchmark::State& state) {
  const auto space = hyp8();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample(space, "C", n, 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_DetectRegime(benchmark::State& state) {
  const auto counts = sample(hyp8(), "C", 1'000'000, 42);
  const RegimeOptions opts{state.range(0) == 0 ? ErrorMethod::delta : ErrorMethod::bootstrap,
                           static_cast<unsigned>(state.range(0)), std::nullopt};
  for (auto _ : state) benchmark::DoNotOptimize(detect_regime(counts, opts));
}
BENCHMARK(BM_DetectRegime)->Arg(0)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace
