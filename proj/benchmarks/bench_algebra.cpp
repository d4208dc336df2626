#include <benchmark/benchmark.h>

#include <numeric>

#include "gofk/census.hpp"
#include "gofk/words.hpp"

namespace {

using namespace gofk;

void BM_ConjugacySameTrace(benchmark::State& state) {
  // Conjugate through a witness with entries near the search bound.
  const MatZ2 a(1, 0, 3, 1);
  const MatZ2 p(7, 6, 8, 7);
  const MatZ2 b = p * a * p.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(is_conjugate_gl2z(a, b));
}
BENCHMARK(BM_ConjugacySameTrace);

void BM_ConjugacyOracle(benchmark::State& state) {
  const MatZ2 a(2, 1, 1, 1);
  const MatZ2 b(1, 1, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_conjugacy_oracle(a, b, state.range(0)));
}
BENCHMARK(BM_ConjugacyOracle)->Arg(4)->Arg(8);

void BM_LensCensusSweep(benchmark::State& state) {
  const Int max_p = state.range(0);
  for (auto _ : state) {
    std::size_t total = 0;
    for (Int p = 2; p <= max_p; ++p)
      for (Int q = 1; q < p; ++q)
        if (std::gcd(p, q) == 1) total += gof_count(Manifold3::lens(p, q));
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_LensCensusSweep)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_CommutatorClass(benchmark::State& state) {
  const CyclicWord w = CyclicWord::parse("xxXyXXxYyYxXyxYXyY");
  for (auto _ : state) benchmark::DoNotOptimize(is_commutator_class(w));
}
BENCHMARK(BM_CommutatorClass);

}  // namespace
