#include <benchmark/benchmark.h>

#include <numbers>

#include "qcorr/measures.hpp"
#include "qcorr/models.hpp"

using namespace qcorr;

namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix sample_state() {
    return dephasing_state({0.5, kPi / 60, 1.0, 1.3, Model::Dephasing});
}

void BM_HermEig4(benchmark::State& state) {
    const CMatrix m = sample_state().mat;
    for (auto _ : state) benchmark::DoNotOptimize(herm_eig(m));
}
BENCHMARK(BM_HermEig4);

void BM_CavityState(benchmark::State& state) {
    const ModelParams mp{0.5, kPi / 4, 0.0, 2.2, Model::Cavity};
    for (auto _ : state) benchmark::DoNotOptimize(cavity_state(mp));
}
BENCHMARK(BM_CavityState);

void BM_ConditionalEntropy(benchmark::State& state) {
    const DensityMatrix rho = sample_state();
    const MeasurementBasis basis{1.1, 2.3};
    for (auto _ : state)
        benchmark::DoNotOptimize(conditional_entropy(rho, basis, Subsystem::B));
}
BENCHMARK(BM_ConditionalEntropy);

void BM_Gmqd(benchmark::State& state) {
    const DensityMatrix rho = sample_state();
    for (auto _ : state) benchmark::DoNotOptimize(gmqd(rho));
}
BENCHMARK(BM_Gmqd);

void BM_Negativity(benchmark::State& state) {
    const DensityMatrix rho = sample_state();
    for (auto _ : state) benchmark::DoNotOptimize(negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_ClassicalCorrelation(benchmark::State& state) {
    const DensityMatrix rho = sample_state();
    for (auto _ : state)
        benchmark::DoNotOptimize(classical_correlation(rho, Subsystem::B));
}
BENCHMARK(BM_ClassicalCorrelation);

void BM_CorrelationReport(benchmark::State& state) {
    const DensityMatrix rho = sample_state();
    for (auto _ : state) benchmark::DoNotOptimize(correlation_report(rho));
}
BENCHMARK(BM_CorrelationReport);

}  // namespace

BENCHMARK_MAIN();
