#include <benchmark/benchmark.h>

#include "walklab/generators.hpp"
#include "walklab/kernels.hpp"

#include <vector>

namespace {

using namespace walklab;

void matvec_args(benchmark::internal::Benchmark* b) {
  for (long n : {1000, 10000, 100000}) b->Arg(n);
}

template <bool Parallel>
void BM_matvec(benchmark::State& state) {
  const auto g = random_regular(static_cast<std::size_t>(state.range(0)), 3, 1);
  const auto m = kernels::normalized_adjacency_csr(g);
  std::vector<double> x(g.size(), 1.0), y(g.size());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::matvec(m, x, y);
    else
      kernels::serial::matvec(m, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(m.values.size()));
}

template <bool Parallel>
void BM_int_matmul(benchmark::State& state) {
  const auto a = kernels::adjacency_int(random_regular(static_cast<std::size_t>(state.range(0)), 4, 2));
  const auto a2 = kernels::serial::int_matmul(a, a);
  for (auto _ : state) {
    auto c = Parallel ? kernels::omp::int_matmul(a2, a) : kernels::serial::int_matmul(a2, a);
    benchmark::DoNotOptimize(c.data.data());
  }
}

}  // namespace

BENCHMARK(BM_matvec<false>)->Apply(matvec_args);
BENCHMARK(BM_matvec<true>)->Apply(matvec_args);
BENCHMARK(BM_int_matmul<false>)->Arg(32)->Arg(64);
BENCHMARK(BM_int_matmul<true>)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
