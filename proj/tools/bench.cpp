#include "minrep/sl3kernel.hpp"
#include "minrep/symdecomp.hpp"

#include <benchmark/benchmark.h>

using namespace minrep;

namespace {

std::vector<linalg::SparseVec> top_seed(const S2Layout& layout)
{
  return {layout.encode(s2_summands(layout.n()).front().hw_vector)};
}

void BM_ClosureSerial(benchmark::State& state)
{
  S2Layout layout(static_cast<int>(state.range(0)));
  auto action = layout.simple_action();
  auto seeds = top_seed(layout);
  for (auto _ : state) benchmark::DoNotOptimize(closure_serial(seeds, action).rank());
}

void BM_ClosureParallel(benchmark::State& state)
{
  S2Layout layout(static_cast<int>(state.range(0)));
  auto action = layout.simple_action();
  auto seeds = top_seed(layout);
  for (auto _ : state) benchmark::DoNotOptimize(closure_parallel(seeds, action).rank());
}

void BM_DecomposeSerial(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(decompose_s2(static_cast<int>(state.range(0)), false).combined_rank);
}

void BM_DecomposeParallel(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(decompose_s2(static_cast<int>(state.range(0)), true).combined_rank);
}

void BM_KernelSerial(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(kernel_report_serial(Rat(3), static_cast<int>(state.range(0))).entries.size());
}

void BM_KernelParallel(benchmark::State& state)
{
  for (auto _ : state) benchmark::DoNotOptimize(kernel_report(Rat(3), static_cast<int>(state.range(0))).entries.size());
}

} // namespace

BENCHMARK(BM_ClosureSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosureParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSerial)->Arg(81)->Arg(161)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelParallel)->Arg(81)->Arg(161)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
