#include "tvs/complexity.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <tuple>
#include <utility>

#include "tvs/error.hpp"
#include "tvs/random.hpp"
#include "tvs/sampling.hpp"

namespace tvs {

namespace {

constexpr double kMinBatchSeconds = 10e-3;

using Clock = std::chrono::steady_clock;

template <typename F>
double time_batch(std::size_t batch, F& f) {
  const auto start = Clock::now();
  for (std::size_t i = 0; i < batch; ++i) {
    f();
  }
  const std::chrono::duration<double> elapsed = Clock::now() - start;
  return elapsed.count();
}

// Smallest power-of-two batch that runs for at least kMinBatchSeconds.
template <typename F>
std::size_t calibrate(F& f) {
  std::size_t batch = 1;
  while (time_batch(batch, f) < kMinBatchSeconds && batch < (std::size_t{1} << 20)) {
    batch *= 2;
  }
  return batch;
}

// Per-call times of a and b: batches of the two alternate so that machine
// drift hits both alike, and the fastest of `repetitions` batches is kept.
template <typename A, typename B>
std::pair<double, double> min_seconds(std::size_t repetitions, A&& a, B&& b) {
  const std::size_t batch_a = calibrate(a);
  const std::size_t batch_b = calibrate(b);
  double best_a = std::numeric_limits<double>::infinity();
  double best_b = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < std::max<std::size_t>(repetitions, 1); ++r) {
    best_a = std::min(best_a, time_batch(batch_a, a) / static_cast<double>(batch_a));
    best_b = std::min(best_b, time_batch(batch_b, b) / static_cast<double>(batch_b));
  }
  return {best_a, best_b};
}

}  // namespace

BenchRow bench_instance(const ReducedBasis& basis, std::size_t repetitions) {
  const auto& s = basis.support();
  BenchRow row;
  row.vertices = s.vertices();
  row.times = s.times();
  row.bandwidth = s.bandwidth();
  row.time_bandwidth = s.time_bandwidth();
  row.graph_bandwidth = s.graph_bandwidth();
  row.separate_samples = s.time_bandwidth() * s.graph_bandwidth();

  std::size_t critical = 0;
  std::size_t naive = 0;
  std::tie(row.factored_seconds, row.naive_seconds) = min_seconds(
      repetitions, [&] { critical = critical_sampling_set(basis).plan.size(); },
      [&] { naive = max_lin_indep_rows(joint_columns(basis)).size(); });
  if (naive != critical) {
    throw NumericalError("benchmark: naive search found " + std::to_string(naive) +
                         " rows but the factored search " + std::to_string(critical));
  }
  row.critical_samples = critical;
  return row;
}

BenchRow bench_size(std::size_t size, std::uint64_t seed, std::size_t repetitions) {
  if (size < 2) {
    throw InputError("benchmark size must be at least 2");
  }
  Rng rng(seed);
  const std::size_t k = (size + 3) / 4;
  RandomGraphOptions opts;
  opts.edge_probability = std::min(1.0, 4.0 / static_cast<double>(size));
  auto tg = random_connected_graph(size, rng, opts);
  auto vg = random_connected_graph(size, rng, opts);
  auto support = random_support(size, size, k, k, 0.0, rng);
  const auto inst = make_instance(std::move(tg), std::move(vg), std::move(support));
  return bench_instance(inst.reduced, repetitions);
}

std::string bench_csv_header() {
  return "N,T,K,K_T,K_G,critical_samples,separate_samples,factored_seconds,naive_seconds,ratio\n";
}

std::string bench_csv_row(const BenchRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%zu,%zu,%zu,%zu,%zu,%zu,%zu,%.9f,%.9f,%.6f\n", row.vertices,
                row.times, row.bandwidth, row.time_bandwidth, row.graph_bandwidth,
                row.critical_samples, row.separate_samples, row.factored_seconds,
                row.naive_seconds, row.ratio());
  return buf;
}

}  // namespace tvs
