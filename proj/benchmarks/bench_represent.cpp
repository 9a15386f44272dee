#include <benchmark/benchmark.h>

#include "hyperprob/forward.hpp"
#include "hyperprob/qlra.hpp"

namespace {

using namespace hyperprob;

ContextStatistics hyp8_c() {
  ContextStatistics s;
  s.context = "C";
  s.p_a = {0.5, 0.5};
  s.p_b = {0.95, 0.05};
  s.transition = {{{0.8, 0.2}, {0.2, 0.8}}};
  return s;
}

void BM_Represent(benchmark::State& state) {
  const auto s = hyp8_c();
  for (auto _ : state) benchmark::DoNotOptimize(represent(s));
}
BENCHMARK(BM_Represent);

void BM_RoundTrip(benchmark::State& state) {
  const auto rep = represent(hyp8_c());
  for (auto _ : state) {
    const auto d = decompose(rep.amplitude, rep.a_basis->vectors);
    benchmark::DoNotOptimize(forward(d.coefficients, rep.a_basis->transition));
  }
}
BENCHMARK(BM_RoundTrip);

}  // namespace
