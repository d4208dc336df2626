#include <benchmark/benchmark.h>

#include "gofk/enumerate.hpp"

namespace {

using namespace gofk;

void BM_EnumerateSphere(benchmark::State& state) {
  const StandardDiagram d = build_standard_diagram(Manifold3::s3());
  EnumerationOptions opts;
  opts.max_crossings = static_cast<int>(state.range(0));
  std::size_t curves = 0;
  for (auto _ : state) {
    curves = enumerate_curves(d, opts).size();
    benchmark::DoNotOptimize(curves);
  }
  state.counters["curves"] = static_cast<double>(curves);
}
BENCHMARK(BM_EnumerateSphere)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SearchLensHandle(benchmark::State& state) {
  const StandardDiagram d = build_standard_diagram(Manifold3::parse("L(3,1)#S2xS1"));
  EnumerationOptions opts;
  opts.max_crossings = static_cast<int>(state.range(0));
  opts.jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_gof(d, opts));
}
BENCHMARK(BM_SearchLensHandle)->Args({8, 1})->Args({10, 1})->Args({10, 4})->Unit(benchmark::kMillisecond);

void BM_IsGof(benchmark::State& state) {
  const StandardDiagram d = build_standard_diagram(Manifold3::parse("S2xS1#S2xS1"));
  EnumerationOptions opts;
  opts.max_crossings = 8;
  const auto curves = search_gof(d, opts);
  for (auto _ : state)
    for (const auto& c : curves) benchmark::DoNotOptimize(is_gof(c, d));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(curves.size()));
}
BENCHMARK(BM_IsGof);

}  // namespace
