#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "tvs/bandlimit.hpp"
#include "tvs/graph.hpp"
#include "tvs/spectral.hpp"

namespace tvs {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  double edge_probability{0.5};
  double min_weight{0.5};
  double max_weight{1.5};
  int max_attempts{10000};
};

/// Erdős–Rényi graph with uniform random weights, redrawn until connected.
Graph random_connected_graph(std::size_t n, Rng& rng, const RandomGraphOptions& options = {});

/// Support with exactly `kt` time and `kg` graph frequencies, drawn
/// uniformly. Every chosen row and column is covered once, then each
/// remaining cell of the kt x kg rectangle joins with probability `fill`.
SpectralSupport random_support(std::size_t times, std::size_t vertices, std::size_t kt,
                               std::size_t kg, double fill, Rng& rng);

/// Random simultaneously bandlimited support (K_T < T, K_G < N). Needs
/// T, N >= 2.
SpectralSupport random_sbl_support(std::size_t times, std::size_t vertices, Rng& rng);

/// Coefficients uniform in ±[0.5, 1.5] on every support pair.
SpectralCoefficients random_coefficients(const SpectralSupport& support, Rng& rng);

enum class TimeGraphKind { Cycle, Random };

/// A complete random problem: factor graphs, their eigenbases, a support
/// and the reduced bases on it.
struct Instance {
  Graph time_graph;
  Graph vertex_graph;
  EigenBasis time_basis;
  EigenBasis graph_basis;
  SpectralSupport support;
  ReducedBasis reduced;
};

Instance random_instance(std::size_t times, std::size_t vertices, TimeGraphKind kind, Rng& rng);

Instance make_instance(Graph time_graph, Graph vertex_graph, SpectralSupport support);

}  // namespace tvs
