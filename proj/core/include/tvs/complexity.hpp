#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tvs/bandlimit.hpp"

namespace tvs {

/// Timing of the factored critical-set search against a direct search for
/// independent rows over all NT rows of Ũ_J.
struct BenchRow {
  std::size_t vertices{0};
  std::size_t times{0};
  std::size_t bandwidth{0};
  std::size_t time_bandwidth{0};
  std::size_t graph_bandwidth{0};
  std::size_t critical_samples{0};
  std::size_t separate_samples{0};
  double factored_seconds{0.0};
  double naive_seconds{0.0};

  double ratio() const { return factored_seconds / naive_seconds; }
};

/// Times both searches on one problem. Each reported time is per call: the
/// minimum over `repetitions` batches of at least ~10 ms, with batches of
/// the two searches interleaved.
BenchRow bench_instance(const ReducedBasis& basis, std::size_t repetitions);

/// Random connected factor graphs with N = T = `size`, K_T = K_G =
/// ceil(size / 4), and the sparsest support with those projection
/// bandwidths (K = K_T = K_G, one pair per time and graph frequency).
BenchRow bench_size(std::size_t size, std::uint64_t seed, std::size_t repetitions);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRow& row);

}  // namespace tvs
