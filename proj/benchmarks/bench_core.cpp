#include <benchmark/benchmark.h>

#include "tsol/tsol.hpp"

using namespace tsol;

namespace {

Pattern scrambled_line(int n) { return random_walk(p_nk(n, 0, {0, 0}), 10ull * n * n, 42); }

void BM_Fill(benchmark::State& state) {
  const Pattern p = scrambled_line(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fill(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fill)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_NormalForm(benchmark::State& state) {
  const Pattern p = scrambled_line(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(p));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormalForm)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_ToNormalForm(benchmark::State& state) {
  const Pattern p = scrambled_line(static_cast<int>(state.range(0)));
  std::size_t moves = 0;
  for (auto _ : state) {
    auto seq = to_normal_form(p);
    moves = seq.moves.size();
    benchmark::DoNotOptimize(seq);
  }
  state.counters["moves"] = static_cast<double>(moves);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToNormalForm)->RangeMultiplier(2)->Range(4, 64)->Complexity(benchmark::oNCubed);

void BM_ToNormalFormExcess(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Pattern p = random_walk(p_nk(n, n, {0, 0}), 10ull * n * n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(to_normal_form(p));
}
BENCHMARK(BM_ToNormalFormExcess)->RangeMultiplier(2)->Range(4, 32);

void BM_OrbitBfs(benchmark::State& state) {
  const Pattern line = p_nk(static_cast<int>(state.range(0)), 0, {0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(orbit_size(line));
}
BENCHMARK(BM_OrbitBfs)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Diameter(benchmark::State& state) {
  const Pattern line = p_nk(static_cast<int>(state.range(0)), 0, {0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(diameter(line));
}
BENCHMARK(BM_Diameter)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CompileBasisChange(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto fam = TepFamily::from_rule("add:3");
  const Pattern p = scrambled_line(n);
  const Pattern q = edges_of_triangle(n, {0, 0})[2];
  for (auto _ : state) benchmark::DoNotOptimize(compile_basis_change(fam, p, q, n));
}
BENCHMARK(BM_CompileBasisChange)->RangeMultiplier(2)->Range(4, 32);

}  // namespace

BENCHMARK_MAIN();
