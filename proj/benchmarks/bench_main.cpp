#include <benchmark/benchmark.h>

#include "cebench/contextuality.hpp"
#include "cebench/correlations.hpp"
#include "cebench/detector.hpp"
#include "cebench/pipeline.hpp"

namespace {

const cebench::SourceSpec kS1 = cebench::source_with_intensity(1.0, cebench::kDefaultOmega1);
const cebench::SourceSpec kS2 = cebench::source_with_intensity(1.0, cebench::kDefaultOmega2);

void BM_EvolveAndSplit(benchmark::State& state) {
  const cebench::PhaseSetting ps{0.3, -0.2, 1.1, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(cebench::apply_bs_prime(cebench::evolve_prestate(kS1, kS2, ps)));
}
BENCHMARK(BM_EvolveAndSplit);

void BM_CorrelationNumeric(benchmark::State& state) {
  const cebench::PhaseSetting ps{0.3, -0.2, 1.1, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(cebench::correlation_numeric(ps, kS1, kS2));
}
BENCHMARK(BM_CorrelationNumeric);

void BM_SumIdentity(benchmark::State& state) {
  const cebench::PhaseSetting ps{0.3, -0.2, 1.1, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(cebench::sum_identity(ps, kS1, kS2));
}
BENCHMARK(BM_SumIdentity)->Unit(benchmark::kMicrosecond);

void BM_ScanMax(benchmark::State& state) {
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cebench::scan_max(cebench::ChshCase::One, resolution));
}
BENCHMARK(BM_ScanMax)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Autocorrelation(benchmark::State& state) {
  const double window = cebench::beat_locked_window(static_cast<double>(state.range(0)), kS1.omega, kS2.omega);
  for (auto _ : state)
    benchmark::DoNotOptimize(cebench::autocorrelation_demo(kS1, kS2, {1.0, 0.0, 0.0, 0.0}, window, 10000));
}
BENCHMARK(BM_Autocorrelation)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
