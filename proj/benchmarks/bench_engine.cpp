#include <benchmark/benchmark.h>

#include "beauville/collections.hpp"
#include "beauville/paper_check.hpp"
#include "beauville/report.hpp"

namespace {

using namespace beauville;

void BM_KunnethPoly(benchmark::State& state) {
  const Surface& s = Surface::beauville();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(s.kunneth_poly(LineBundleClass::K(n, n)));
}
BENCHMARK(BM_KunnethPoly)->Arg(1)->Arg(4)->Arg(16);

void BM_CurvePoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_cohomology_poly(CurveAction::fermat_c_prime(), n));
}
BENCHMARK(BM_CurvePoly)->Arg(2)->Arg(8)->Arg(32);

void BM_Table(benchmark::State& state) {
  const Surface& s = Surface::beauville();
  for (auto _ : state) benchmark::DoNotOptimize(render_table(s, BidegreeBox{}, Format::json));
}
BENCHMARK(BM_Table)->Unit(benchmark::kMillisecond);

void BM_AcyclicSupport(benchmark::State& state) {
  const Surface& s = Surface::beauville();
  for (auto _ : state) benchmark::DoNotOptimize(AcyclicSupport::compute(s));
}
BENCHMARK(BM_AcyclicSupport)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const Surface& s = Surface::beauville();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_collections(s, {BidegreeBox{}, threads}));
}
BENCHMARK(BM_Search)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_FactCheck(benchmark::State& state) {
  const Surface& s = Surface::beauville();
  const auto facts = default_facts();
  for (auto _ : state) benchmark::DoNotOptimize(run_paper_check(s, facts));
}
BENCHMARK(BM_FactCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
