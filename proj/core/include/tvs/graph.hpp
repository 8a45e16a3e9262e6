#pragma once

#include <cstddef>
#include <vector>

#include "tvs/types.hpp"

namespace tvs {

struct Edge {
  std::size_t i{0};
  std::size_t j{0};
  double w{1.0};

  bool operator==(const Edge&) const = default;
};

/// Undirected weighted graph without self-loops or parallel edges.
///
/// The constructor validates every edge and throws InputError otherwise;
/// a constructed Graph is always valid. Edges are stored with i < j in
/// lexicographic order so equal graphs compare equal.
class Graph {
public:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool operator==(const Graph&) const = default;

private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Dense symmetric graph Laplacian L = D - W.
class LaplacianMatrix {
public:
  /// Wraps an existing matrix after checking symmetry, zero row sums and
  /// non-positive off-diagonals (tolerance 1e-12, scaled by the entries).
  explicit LaplacianMatrix(Matrix m);

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(m_.rows()); }

private:
  Matrix m_;
};

LaplacianMatrix laplacian(const Graph& g);

/// Unit-weight cycle 0-1-...-(T-1)-0. Requires T >= 3.
Graph cycle_graph(std::size_t T);

Graph path_graph(std::size_t n);

/// Star with every other vertex attached to `center` by a unit edge.
Graph star_graph(std::size_t n, std::size_t center);

/// Kronecker sum (L_T ⊗ I_N) + (I_T ⊗ L_G): joint vertex (t, v) has linear
/// index t*N + v, matching column-major vectorization of an N x T signal.
LaplacianMatrix cartesian_laplacian(const LaplacianMatrix& time, const LaplacianMatrix& graph);

bool is_connected(const Graph& g);

}  // namespace tvs
