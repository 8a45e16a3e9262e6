#include "tvs/random.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tvs/error.hpp"

namespace tvs {

namespace {

std::vector<std::size_t> draw_subset(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

}  // namespace

Graph random_connected_graph(std::size_t n, Rng& rng, const RandomGraphOptions& options) {
  if (n == 0) {
    throw InputError("random graph needs at least one vertex");
  }
  if (!(options.edge_probability > 0.0) || options.edge_probability > 1.0) {
    throw InputError("edge probability must lie in (0, 1]");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> weight(options.min_weight, options.max_weight);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (unit(rng) < options.edge_probability) {
          edges.push_back({i, j, weight(rng)});
        }
      }
    }
    Graph g(n, std::move(edges));
    if (is_connected(g)) {
      return g;
    }
  }
  throw InputError("no connected graph drawn in " + std::to_string(options.max_attempts) +
                   " attempts; raise the edge probability");
}

SpectralSupport random_support(std::size_t times, std::size_t vertices, std::size_t kt,
                               std::size_t kg, double fill, Rng& rng) {
  if (kt == 0 || kg == 0 || kt > times || kg > vertices) {
    throw InputError("random_support: need 1 <= K_T <= T and 1 <= K_G <= N");
  }
  const auto tf = draw_subset(times, kt, rng);
  const auto gf = draw_subset(vertices, kg, rng);

  std::vector<std::vector<bool>> used(kt, std::vector<bool>(kg, false));
  const std::size_t cover = std::max(kt, kg);
  for (std::size_t i = 0; i < cover; ++i) {
    used[i % kt][i % kg] = true;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<FrequencyPair> pairs;
  for (std::size_t a = 0; a < kt; ++a) {
    for (std::size_t b = 0; b < kg; ++b) {
      if (used[a][b] || unit(rng) < fill) {
        pairs.push_back({tf[a], gf[b]});
      }
    }
  }
  return SpectralSupport(times, vertices, std::move(pairs));
}

SpectralSupport random_sbl_support(std::size_t times, std::size_t vertices, Rng& rng) {
  if (times < 2 || vertices < 2) {
    throw InputError("an SBL support needs T >= 2 and N >= 2");
  }
  std::uniform_int_distribution<std::size_t> kt(1, times - 1);
  std::uniform_int_distribution<std::size_t> kg(1, vertices - 1);
  std::uniform_real_distribution<double> fill(0.0, 1.0);
  const auto a = kt(rng);
  const auto b = kg(rng);
  return random_support(times, vertices, a, b, fill(rng), rng);
}

SpectralCoefficients random_coefficients(const SpectralSupport& support, Rng& rng) {
  std::uniform_real_distribution<double> magnitude(0.5, 1.5);
  std::bernoulli_distribution negative(0.5);
  SpectralCoefficients out;
  for (const auto& p : support.pairs()) {
    const double m = magnitude(rng);
    out.emplace(p, negative(rng) ? -m : m);
  }
  return out;
}

Instance make_instance(Graph time_graph, Graph vertex_graph, SpectralSupport support) {
  auto tb = eig_sym(laplacian(time_graph));
  auto gb = eig_sym(laplacian(vertex_graph));
  auto reduced = restrict_bases(tb, gb, support);
  return {std::move(time_graph), std::move(vertex_graph), std::move(tb),
          std::move(gb),         std::move(support),      std::move(reduced)};
}

Instance random_instance(std::size_t times, std::size_t vertices, TimeGraphKind kind, Rng& rng) {
  Graph tg = kind == TimeGraphKind::Cycle ? cycle_graph(times) : random_connected_graph(times, rng);
  Graph vg = random_connected_graph(vertices, rng);
  auto support = random_sbl_support(times, vertices, rng);
  return make_instance(std::move(tg), std::move(vg), std::move(support));
}

}  // namespace tvs
