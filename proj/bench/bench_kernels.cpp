// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "curvcmp/comparison_engine.hpp"
#include "curvcmp/fitting.hpp"
#include "curvcmp/kernels.hpp"

using namespace curvcmp;

namespace {

SampledFunction sample(std::size_t n) {
  const ComparisonParams p = fit({0, 1, 0.6, 0.8, Curvature(-1)}).params;
  return perturb(synth(p, 0, 1, n), -1e-3, 0.5, 0.2);
}

template <auto Scan>
void BM_PairScan(benchmark::State& state) {
  const SampledFunction f = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Scan(f.ts(), f.gs(), 1e-9));
  state.SetComplexityN(state.range(0));
}

template <auto Stencil>
void BM_Stencil(benchmark::State& state) {
  const SampledFunction f = sample(static_cast<std::size_t>(state.range(0)));
  const std::size_t m = f.size() - 6;
  std::vector<double> r(m), s(m);
  const double h = 1.0 / static_cast<double>(f.size() - 1);
  for (auto _ : state) {
    Stencil(f.gs(), h, Curvature(-1), 6, kernels::StencilOut{r, s});
    benchmark::DoNotOptimize(r.data());
  }
}

template <auto Gaps>
void BM_ChordGaps(benchmark::State& state) {
  const SampledFunction f = sample(4001);
  const std::vector<IndexPair> chords = draw_chords(f.size(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Gaps(f, Curvature(-1), chords));
}

template <auto Audit>
void BM_Audit(benchmark::State& state) {
  const SampledFunction f = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Audit(f, Curvature(-1), 200, 1, 0.0));
}

}  // namespace

BENCHMARK(BM_PairScan<kernels::serial::pair_scan>)->Name("pair_scan/serial")->Arg(1000)->Arg(4000);
BENCHMARK(BM_PairScan<kernels::parallel::pair_scan>)->Name("pair_scan/parallel")->Arg(1000)->Arg(4000);
BENCHMARK(BM_Stencil<kernels::serial::stencil_residuals>)->Name("stencil/serial")->Arg(100001)->Arg(1000001);
BENCHMARK(BM_Stencil<kernels::parallel::stencil_residuals>)->Name("stencil/parallel")->Arg(100001)->Arg(1000001);
BENCHMARK(BM_ChordGaps<kernels::serial::chord_gap_ranges>)->Name("chord_gaps/serial")->Arg(200)->Arg(2000);
BENCHMARK(BM_ChordGaps<kernels::parallel::chord_gap_ranges>)->Name("chord_gaps/parallel")->Arg(200)->Arg(2000);
BENCHMARK(BM_Audit<reference::equivalence_audit>)->Name("audit/serial")->Arg(2001)->Arg(20001);
BENCHMARK(BM_Audit<equivalence_audit>)->Name("audit/parallel")->Arg(2001)->Arg(20001);

BENCHMARK_MAIN();
