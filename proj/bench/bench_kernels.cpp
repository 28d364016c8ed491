// Serial reference kernels against their OpenMP counterparts.

#include "nok/lattice.hpp"
#include "nok/lp.hpp"
#include "nok/minkowski.hpp"
#include "nok/verify.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

namespace {

using namespace nok;

const BundleSpec& spec4() {
  static const BundleSpec s = parse_weights(4, "2,1,0,0;2,1,0;1,0");
  return s;
}

const ProjectionChain& chain4() {
  static const ProjectionChain c(explicit_hrep(fflv_sum_spec(spec4())));
  return c;
}

void count_chain(benchmark::State& state, bool parallel) {
  const auto& chain = chain4();
  for (auto _ : state) benchmark::DoNotOptimize(chain.count(state.range(0), parallel));
}

void BM_CountSerial(benchmark::State& state) { count_chain(state, false); }
void BM_CountParallel(benchmark::State& state) { count_chain(state, true); }
BENCHMARK(BM_CountSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

HPolytope redundant_system() {
  // Lifted sum projected without pruning keeps many implied rows.
  HPolytope lifted = lifted_system(fflv_sum_spec(spec4()));
  std::vector<std::size_t> keep(6);
  std::iota(keep.begin(), keep.end(), lifted.dim() - 6);
  ProjectionOptions raw;
  raw.prune = false;
  return fm_project(lifted, keep, raw);
}

void BM_RedundancySerial(benchmark::State& state) {
  static const HPolytope p = redundant_system();
  for (auto _ : state) benchmark::DoNotOptimize(remove_redundant_serial(p));
  state.counters["rows"] = static_cast<double>(p.size());
}
void BM_RedundancyParallel(benchmark::State& state) {
  static const HPolytope p = redundant_system();
  for (auto _ : state) benchmark::DoNotOptimize(remove_redundant(p, {true}));
  state.counters["rows"] = static_cast<double>(p.size());
}
BENCHMARK(BM_RedundancySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RedundancyParallel)->Unit(benchmark::kMillisecond);

void box_scan(benchmark::State& state, bool parallel) {
  static const HPolytope p = dilate(explicit_hrep(fflv_sum_spec(parse_weights(3, "1,0,-1;1,0"))), 6);
  for (auto _ : state) benchmark::DoNotOptimize(count_by_box_scan(p, parallel));
}
void BM_BoxScanSerial(benchmark::State& state) { box_scan(state, false); }
void BM_BoxScanParallel(benchmark::State& state) { box_scan(state, true); }
BENCHMARK(BM_BoxScanSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxScanParallel)->Unit(benchmark::kMillisecond);

void lp_walk(benchmark::State& state, bool parallel) {
  static const HPolytope lifted = lifted_system(fflv_sum_spec(parse_weights(3, "2,1,0;1,0")).dilated(2));
  std::vector<std::size_t> keep{6, 7, 8};
  for (auto _ : state) benchmark::DoNotOptimize(count_projected(lifted, keep, parallel));
}
void BM_LpWalkSerial(benchmark::State& state) { lp_walk(state, false); }
void BM_LpWalkParallel(benchmark::State& state) { lp_walk(state, true); }
BENCHMARK(BM_LpWalkSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LpWalkParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
