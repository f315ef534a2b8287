// Serial reference versus OpenMP for the data-parallel paths.
#include <benchmark/benchmark.h>

#include "vclab/fixtures.hpp"
#include "vclab/pacsim.hpp"
#include "vclab/scheme.hpp"
#include "vclab/vcdim.hpp"

using namespace vclab;

namespace {

Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? Exec::parallel : Exec::serial;
}

const char* label_of(const benchmark::State& state) {
  return state.range(0) ? "omp" : "serial";
}

ConceptSpace random_space(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<Mask> cs;
  for (std::size_t i = 0; i < count; ++i) cs.push_back(splitmix64(seed) & full_mask(n));
  return ConceptSpace(fixtures::chain_names(n), cs);
}

void BM_VcDimension(benchmark::State& state) {
  auto s = random_space(16, 300, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vc_dimension(s, exec_of(state)).vc);
  state.SetLabel(label_of(state));
}

void BM_VerifyScheme(benchmark::State& state) {
  auto s = fixtures::initial_segments(16);
  auto h = fixtures::segment_scheme(16, false);
  for (auto _ : state) benchmark::DoNotOptimize(verify_scheme(s, h, exec_of(state)).ok);
  state.SetLabel(label_of(state));
}

void BM_IsMaximal(benchmark::State& state) {
  auto s = fixtures::size_at_most(12, 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_maximal(s, 2, exec_of(state)));
  state.SetLabel(label_of(state));
}

void BM_PacExperiment(benchmark::State& state) {
  auto s = fixtures::initial_segments(20);
  auto h = fixtures::segment_scheme(20, false);
  auto u = Distribution::uniform(20);
  Experiment e;
  e.space = &s;
  e.scheme = &h;
  e.dist = &u;
  e.target = 10;
  e.m = 78;
  e.epsilon = 0.1;
  e.trials = 20000;
  e.seed = 20190101;
  for (auto _ : state) benchmark::DoNotOptimize(pac_experiment(e, exec_of(state)).failures);
  state.SetLabel(label_of(state));
}

}  // namespace

BENCHMARK(BM_VcDimension)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyScheme)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsMaximal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PacExperiment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
