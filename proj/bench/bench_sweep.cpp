// Serial reference sweep against the OpenMP kernel at several worker counts.
//
//   ./nlk_bench --benchmark_filter=FundamentalIdentity

#include <benchmark/benchmark.h>

#include <vector>

#include "nlk/catalog.hpp"
#include "nlk/sweep.hpp"

namespace {

const nlk::MetricAlgebra& sweep_instance() {
  // arity 4, dimension 12; the dense reference is two orders of magnitude slower
  static const nlk::MetricAlgebra ma = [] {
    const std::vector<nlk::MetricAlgebra> parts{nlk::build_simple(4, 1), nlk::build_case1(4, 3, 1)};
    return nlk::ortho_direct_sum(parts);
  }();
  return ma;
}

void BM_FundamentalIdentityReference(benchmark::State& state) {
  const auto& a = sweep_instance().algebra();
  for (auto _ : state) benchmark::DoNotOptimize(nlk::kernels::fundamental_identity_reference(a));
}

void BM_FundamentalIdentityParallel(benchmark::State& state) {
  const auto& a = sweep_instance().algebra();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nlk::kernels::fundamental_identity_parallel(a, workers));
}

void BM_InvarianceReference(benchmark::State& state) {
  const auto& ma = sweep_instance();
  for (auto _ : state) benchmark::DoNotOptimize(nlk::kernels::invariance_reference(ma.algebra(), ma.form().gram()));
}

void BM_InvarianceParallel(benchmark::State& state) {
  const auto& ma = sweep_instance();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(nlk::kernels::invariance_parallel(ma.algebra(), ma.form().gram(), workers));
}

}  // namespace

BENCHMARK(BM_FundamentalIdentityReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FundamentalIdentityParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_InvarianceReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvarianceParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
