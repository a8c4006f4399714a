#include <benchmark/benchmark.h>

#include "rsparse/norms.hpp"
#include "rsparse/rng.hpp"
#include "rsparse/simplex.hpp"
#include "rsparse/sparse_mean.hpp"
#include "rsparse/sparse_pca.hpp"
#include "rsparse/synthetic.hpp"

using namespace rsparse;

static void BM_Projection(benchmark::State& state) {
  const Index n = state.range(0);
  Rng rng(1);
  const CappedSimplex dom(n, 0.1);
  const Vector x = rng.normal_vector(n) / static_cast<double>(n);
  for (auto _ : state) benchmark::DoNotOptimize(project_capped_simplex(x, dom));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Projection)->RangeMultiplier(4)->Range(256, 65536)->Complexity();

static void BM_FkkNorm(benchmark::State& state) {
  const Index d = state.range(0);
  Rng rng(2);
  Matrix a(d, d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i) a(i, j) = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(fkk_norm(a, 5));
}
BENCHMARK(BM_FkkNorm)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

// One objective evaluation plus subgradient, the per-iteration cost of descent.
static void BM_SparseMeanStep(benchmark::State& state) {
  const Index d = state.range(0), n = state.range(1);
  const auto data = corrupt_linear_hiding(gen_sparse_mean_data(d, 5, n, 3), 0.1, 4);
  const WeightVector w = uniform_weights(CappedSimplex(n, 0.1));
  for (auto _ : state) {
    const auto obj = objective_sparse_mean(data.x, w, 5);
    benchmark::DoNotOptimize(subgradient_sparse_mean(data.x, w.w, obj.y));
  }
}
BENCHMARK(BM_SparseMeanStep)->Args({100, 1000})->Args({100, 5000})->Unit(benchmark::kMillisecond);

static void BM_SparsePcaStep(benchmark::State& state) {
  const Index d = state.range(0), n = state.range(1);
  const auto data = corrupt_constant_bias(gen_spiked_data(d, 5, n, 1.0, 5), 0.05, 2.0, 6);
  const WeightVector w = uniform_weights(CappedSimplex(n, 0.05));
  for (auto _ : state) {
    const auto obj = objective_sparse_pca(data.x, w, 5);
    benchmark::DoNotOptimize(subgradient_sparse_pca(data.x, obj.y));
  }
}
BENCHMARK(BM_SparsePcaStep)->Args({100, 2000})->Args({200, 10000})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
