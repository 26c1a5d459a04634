#include <benchmark/benchmark.h>

#include <exckit/admissibility.hpp>
#include <exckit/chern_sums.hpp>
#include <exckit/compositions.hpp>
#include <exckit/hilbert.hpp>

#include <cstdint>
#include <vector>

namespace {

void BM_Compositions(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    exckit::for_each_composition(4, total, [&](const auto&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Compositions)->Arg(12)->Arg(24);

void BM_WeightedCompositions(benchmark::State& state) {
  const int total = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    exckit::for_each_weighted_composition(2, 4, total, [&](const auto&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_WeightedCompositions)->Arg(12)->Arg(24);

void BM_LeadingCoefficient(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const exckit::Geometry g(p + 2, p, {3, -1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(exckit::leading_coefficient(g));
  }
}
BENCHMARK(BM_LeadingCoefficient)->Arg(2)->Arg(4);

void BM_HilbertValue(benchmark::State& state) {
  const std::vector<exckit::Degree> a{5, 1, 2};
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exckit::hilbert_value(a, 2, r));
  }
}
BENCHMARK(BM_HilbertValue)->Arg(10)->Arg(30);

void BM_EnumerateAdmissible(benchmark::State& state) {
  exckit::CatalogParams params;
  params.p = 2;
  params.codim = 3;
  params.bound = 4;
  params.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exckit::enumerate_admissible(params));
  }
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
