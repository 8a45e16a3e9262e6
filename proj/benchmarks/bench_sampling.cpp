#include <benchmark/benchmark.h>

#include "tvs/random.hpp"
#include "tvs/sampling.hpp"

using namespace tvs;

namespace {

// Random N = T = size problem with K_T = K_G = ceil(size / 4) and one support
// pair per chosen frequency.
ReducedBasis problem(std::size_t size) {
  Rng rng(size);
  RandomGraphOptions opts;
  opts.edge_probability = std::min(1.0, 4.0 / static_cast<double>(size));
  const std::size_t k = (size + 3) / 4;
  auto support = random_support(size, size, k, k, 0.0, rng);
  return make_instance(random_connected_graph(size, rng, opts),
                       random_connected_graph(size, rng, opts), std::move(support))
      .reduced;
}

void BM_Factored(benchmark::State& state) {
  const auto basis = problem(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(critical_sampling_set(basis));
  }
}

void BM_Naive(benchmark::State& state) {
  const auto basis = problem(static_cast<std::size_t>(state.range(0)));
  const Matrix joint = joint_columns(basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_lin_indep_rows(joint));
  }
}

void BM_Jacobi(benchmark::State& state) {
  Rng rng(3);
  const auto l = laplacian(random_connected_graph(static_cast<std::size_t>(state.range(0)), rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_sym(l));
  }
}

}  // namespace

BENCHMARK(BM_Factored)->Arg(16)->Arg(32)->Arg(48)->Arg(64);
BENCHMARK(BM_Naive)->Arg(16)->Arg(32)->Arg(48)->Arg(64);
BENCHMARK(BM_Jacobi)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_MAIN();
