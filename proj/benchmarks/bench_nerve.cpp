#include <string>

#include <benchmark/benchmark.h>

#include "icoh/analysis.hpp"
#include "icoh/io.hpp"

using namespace icoh;

namespace {

SystemSpec spec(const char* name) {
  return load_spec(std::string(ICOH_SPEC_DIR) + "/" + name + ".json");
}

void BM_GasketNerve(benchmark::State& state) {
  const Oracle o(spec("gasket"));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_nerve(o, k, {.dim_cap = 2}));
}
BENCHMARK(BM_GasketNerve)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_SnowflakeNerve(benchmark::State& state) {
  const Oracle o(spec("snowflake"));
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_nerve(o, k, {.dim_cap = 2}));
}
BENCHMARK(BM_SnowflakeNerve)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SymbolicNerve(benchmark::State& state) {
  const auto s = spec("pentakun");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_pu_nerve(s, k, 3));
}
BENCHMARK(BM_SymbolicNerve)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Betti(benchmark::State& state) {
  const Oracle o(spec("gasket"));
  const auto n = build_nerve(o, static_cast<int>(state.range(0)), {.dim_cap = 2}).complex;
  const auto f = state.range(1) ? FieldKind::gf(2) : FieldKind::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(betti(n, f, 1));
}
BENCHMARK(BM_Betti)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_InducedRank(benchmark::State& state) {
  const auto t = build_tower(Oracle(spec("gasket")), static_cast<int>(state.range(0)), {.dim_cap = 2});
  const auto phi = truncation_map(t.at(t.depth()), t.at(1));
  for (auto _ : state) benchmark::DoNotOptimize(induced_rank(phi, 1, FieldKind::rationals()));
}
BENCHMARK(BM_InducedRank)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PostunbranchedCheck(benchmark::State& state) {
  const Oracle o(spec("notinjmu"));
  for (auto _ : state) benchmark::DoNotOptimize(check_postunbranched(o, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PostunbranchedCheck)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
