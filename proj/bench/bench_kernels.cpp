// Serial reference vs OpenMP paths for the parallel kernels.

#include <benchmark/benchmark.h>

#include "udisc/bounds.hpp"
#include "udisc/classify.hpp"
#include "udisc/generators.hpp"
#include "udisc/oracle.hpp"

using namespace udisc;

namespace {

const ToleranceConfig kTol{};

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void set_label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_FidelityMatrix(benchmark::State& state) {
  GenSpec spec;
  spec.dim = 12;
  spec.n = 6;
  spec.ranks.assign(6, 4);
  spec.seed = 1;
  const Ensemble e = generate(spec);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_matrix(e, kTol, exec_of(state)));
  set_label(state);
}

void BM_ClassifyBatch(benchmark::State& state) {
  std::vector<Ensemble> batch;
  for (std::uint64_t k = 0; k < 64; ++k) {
    GenSpec spec;
    spec.dim = 8;
    spec.n = 4;
    spec.seed = k;
    batch.push_back(generate(spec));
  }
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch(batch, kTol, exec_of(state)));
  set_label(state);
}

void BM_OracleRestarts(benchmark::State& state) {
  GenSpec spec;
  spec.dim = 5;
  spec.n = 3;
  spec.seed = 2;
  const Ensemble e = generate(spec);
  OracleOptions opt;
  opt.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_unambiguous(e, kTol, opt));
  set_label(state);
}

}  // namespace

BENCHMARK(BM_FidelityMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ClassifyBatch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleRestarts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
