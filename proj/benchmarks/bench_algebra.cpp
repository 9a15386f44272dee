#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hyperprob/hypernum.hpp"
#include "hyperprob/hyperspace.hpp"

namespace {

using hyperprob::HyperNumber;

std::vector<HyperNumber> random_numbers(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<HyperNumber> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(u(rng), u(rng));
  return out;
}

void BM_Multiply(benchmark::State& state) {
  const auto xs = random_numbers(1024);
  for (auto _ : state) {
    HyperNumber acc(1.0);
    for (const auto& z : xs) acc = hyperprob::HyperNumber(acc.x() * 0.5, acc.y() * 0.5) * z;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_Multiply);

void BM_PolarRoundTrip(benchmark::State& state) {
  auto xs = random_numbers(1024);
  std::erase_if(xs, [](const HyperNumber& z) { return !hyperprob::in_g_plus_star(z); });
  for (auto _ : state) {
    for (const auto& z : xs) benchmark::DoNotOptimize(hyperprob::polar(z).reconstruct());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_PolarRoundTrip);

void BM_IsGUnitary(benchmark::State& state) {
  hyperprob::GMatrix2 v;
  const HyperNumber e = hyperprob::hexp(0.494933);
  v(0, 0) = HyperNumber(0.894427191);
  v(0, 1) = HyperNumber(0.447213595);
  v(1, 0) = e * HyperNumber(0.447213595);
  v(1, 1) = -(e * HyperNumber(0.894427191));
  for (auto _ : state) benchmark::DoNotOptimize(hyperprob::is_g_unitary(v, 1e-8));
}
BENCHMARK(BM_IsGUnitary);

}  // namespace
