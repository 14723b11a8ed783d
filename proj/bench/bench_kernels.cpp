// Serial references versus the OpenMP kernels.
//
//   ./quandle_bench --benchmark_filter=Enumerate

#include <benchmark/benchmark.h>

#include "quandle/constructors.hpp"
#include "quandle/enumeration.hpp"
#include "quandle/reference.hpp"
#include "quandle/symmetry.hpp"

namespace {

using namespace quandle;

void BM_EnumerateReferenceNaive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::enumerate_naive(n));
}
BENCHMARK(BM_EnumerateReferenceNaive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EnumerateNaive(benchmark::State& state) {
  EnumerationOptions opts;
  opts.strategy = Strategy::naive;
  opts.jobs = static_cast<int>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(n, opts));
}
BENCHMARK(BM_EnumerateNaive)->Args({5, 1})->Args({5, 2})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_EnumerateBacktracking(benchmark::State& state) {
  EnumerationOptions opts;
  opts.jobs = static_cast<int>(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(n, opts));
}
BENCHMARK(BM_EnumerateBacktracking)
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 2})
    ->Args({6, 4})
    ->Unit(benchmark::kMillisecond);

void BM_AutomorphismsReference(benchmark::State& state) {
  auto q = dihedral(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::automorphism_group(q));
}
BENCHMARK(BM_AutomorphismsReference)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
  auto q = dihedral(static_cast<std::size_t>(state.range(0)));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(q, jobs));
}
BENCHMARK(BM_Automorphisms)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_CanonicalReference(benchmark::State& state) {
  auto q = alexander({static_cast<int>(state.range(0)), {2, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(reference::canonical_form(q));
}
BENCHMARK(BM_CanonicalReference)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_Canonical(benchmark::State& state) {
  auto q = alexander({static_cast<int>(state.range(0)), {2, 1}});
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(q, jobs));
}
BENCHMARK(BM_Canonical)->Args({7, 1})->Args({7, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
