// Serial reference vs. the table-sharing OpenMP batch evaluator on points of
// a blow-up, for exact and binary64 scalars.

#include <benchmark/benchmark.h>

#include "qnull/central.hpp"
#include "qnull/kernels.hpp"
#include "qnull/parse.hpp"

namespace {

using namespace qnull;

template <class S>
struct Workload {
  std::vector<QPoly<S>> polys;
  std::vector<QTuple<S>> points;
};

template <class S>
Workload<S> make_workload(int n_polys, int n_points) {
  auto v = parse_point<S>("(I, 1+2*J, J, 1, I+J, K)");
  auto ms = blow_up(v);
  Rng rng(42);
  auto pool = small_quaternion_pool<S>(1);
  Workload<S> w;
  const int n = static_cast<int>(ms.dim());
  for (int k = 0; k < n_polys; ++k) w.polys.push_back(random_poly<S>(n, 4, 12, pool, rng.next()));
  for (int k = 0; k < n_points; ++k) w.points.push_back(sample_msphere_point(ms, rng));
  return w;
}

template <class S>
void BM_serial(benchmark::State& state) {
  auto w = make_workload<S>(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_batch_serial(w.polys, w.points));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

template <class S>
void BM_parallel(benchmark::State& state) {
  auto w = make_workload<S>(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_batch(w.polys, w.points));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({10, 50})->Args({50, 50})->Args({50, 200})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_serial<qnull::Rat>)->Apply(sizes);
BENCHMARK(BM_parallel<qnull::Rat>)->Apply(sizes);
BENCHMARK(BM_serial<double>)->Apply(sizes);
BENCHMARK(BM_parallel<double>)->Apply(sizes);

BENCHMARK_MAIN();
