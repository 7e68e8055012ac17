#include <benchmark/benchmark.h>

#include "sigma_spectra/constructions.hpp"
#include "sigma_spectra/engine.hpp"
#include "sigma_spectra/validator.hpp"

using namespace sigma_spectra;

namespace {

HypergraphSpec gap_spec() { return HypergraphSpec::make(7, 6, Sigma::build({6, 6}), 3, 3); }
HypergraphSpec wide_spec() { return HypergraphSpec::make(10, 6, Sigma::build({1, 1, 1, 1}), 2, 8); }

template <SpectrumResult (*F)(const HypergraphSpec&, const SpectrumOptions&)>
void BM_Spectrum(benchmark::State& state) {
  const auto spec = gap_spec();
  for (auto _ : state) benchmark::DoNotOptimize(F(spec, {}));
}

template <bool (*F)(const HypergraphSpec&, const Colouring&)>
void BM_IsValid(benchmark::State& state) {
  const auto spec = wide_spec();
  const auto colouring = layered_colouring(spec, spec.n * 2);
  for (auto _ : state) benchmark::DoNotOptimize(F(spec, colouring));
}

}  // namespace

BENCHMARK(BM_Spectrum<spectrum_serial>)->Name("spectrum/serial")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Spectrum<spectrum>)->Name("spectrum/openmp")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_IsValid<is_valid_serial>)->Name("is_valid/serial")->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_IsValid<is_valid>)->Name("is_valid/openmp")->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
