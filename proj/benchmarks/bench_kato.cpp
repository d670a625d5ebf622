#include <benchmark/benchmark.h>

#include "kato/extremal.hpp"
#include "kato/jet.hpp"
#include "kato/kato_constant.hpp"
#include "kato/sampling.hpp"

namespace {

void BM_kappa_closed_form(benchmark::State& state) {
  double p = 1.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kato::kappa(p, 3).value);
    p += 1e-6;
    if (p > 5.0) p = 1.1;
  }
}
BENCHMARK(BM_kappa_closed_form);

void BM_kappa_oracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kato::kappa_oracle(2.41, 3, state.range(0)));
}
BENCHMARK(BM_kappa_oracle)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_build_extremal_jet(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kato::build_extremal_jet(2.41, state.range(0)));
}
BENCHMARK(BM_build_extremal_jet)->Arg(3)->Arg(10)->Arg(50);

void BM_sample_jet(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(kato::sample_p_harmonic_jet(2.41, 3, 3, seed++));
}
BENCHMARK(BM_sample_jet);

void BM_kato_ratio(benchmark::State& state) {
  const kato::PointJet jet = kato::build_extremal_jet(2.41, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kato::kato_ratio(jet));
}
BENCHMARK(BM_kato_ratio);

}  // namespace

BENCHMARK_MAIN();
