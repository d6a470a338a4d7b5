#include <benchmark/benchmark.h>

#include "asai/charlattice.hpp"
#include "asai/lfactor.hpp"
#include "asai/oracle.hpp"

namespace cl = asai::charlattice;
namespace lf = asai::lfactor;

static void BM_EnumerateLifts(benchmark::State& state) {
  cl::FiniteSetting s = cl::FiniteSetting::galois_pair(3, 3);
  cl::EllContext ctx = cl::ell_context(s, 7);
  for (auto _ : state) {
    auto lifts = cl::enumerate_lifts(s, ctx, 26);
    benchmark::DoNotOptimize(lifts);
  }
}
BENCHMARK(BM_EnumerateLifts);

static void BM_ClosedFormCount(benchmark::State& state) {
  cl::FiniteSetting s = cl::FiniteSetting::galois_pair(3, 3);
  cl::EllContext ctx = cl::ell_context(s, 13);
  for (auto _ : state) {
    auto count = cl::closed_form_dual_lift_count(s, ctx, 26, true);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_ClosedFormCount);

static void BM_ParityScan(benchmark::State& state) {
  cl::FiniteSetting s = cl::FiniteSetting::galois_pair(9, 2);
  for (auto _ : state) {
    auto rep = asai::oracle::verify_parity(s);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_ParityScan);

static void BM_ExpandReduce(benchmark::State& state) {
  for (auto _ : state) {
    auto f = lf::expand(lf::RootOfUnity(), 360, 0);
    auto g = lf::reduce_mod_ell(f, 3);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_ExpandReduce);

BENCHMARK_MAIN();
