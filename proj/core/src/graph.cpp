#include "tvs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "tvs/error.hpp"

namespace tvs {

namespace {

constexpr double kLaplacianTol = 1e-12;

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) {
    throw InputError("graph must have at least one vertex");
  }
  for (auto& e : edges_) {
    if (e.i >= n_ || e.j >= n_) {
      throw InputError("edge " + edge_str(e) + " out of range for n = " + std::to_string(n_));
    }
    if (e.i == e.j) {
      throw InputError("self-loop at vertex " + std::to_string(e.i));
    }
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw InputError("edge " + edge_str(e) + " has non-positive or non-finite weight");
    }
    if (e.i > e.j) {
      std::swap(e.i, e.j);
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i == b.i && a.j == b.j;
  });
  if (dup != edges_.end()) {
    throw InputError("duplicate edge " + edge_str(*dup));
  }
}

LaplacianMatrix::LaplacianMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw InputError("Laplacian must be a non-empty square matrix");
  }
  if (!m_.allFinite()) {
    throw InputError("Laplacian has non-finite entries");
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double tol = kLaplacianTol * scale;
  const Eigen::Index n = m_.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    if (std::abs(m_.row(r).sum()) > tol * static_cast<double>(n)) {
      throw InputError("Laplacian row " + std::to_string(r) + " does not sum to zero");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      if (std::abs(m_(r, c) - m_(c, r)) > tol) {
        throw InputError("Laplacian is not symmetric");
      }
      if (r != c && m_(r, c) > tol) {
        throw InputError("Laplacian has a positive off-diagonal entry");
      }
    }
  }
}

LaplacianMatrix laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Matrix l = Matrix::Zero(n, n);
  for (const auto& e : g.edges()) {
    const auto i = static_cast<Eigen::Index>(e.i);
    const auto j = static_cast<Eigen::Index>(e.j);
    l(i, j) -= e.w;
    l(j, i) -= e.w;
    l(i, i) += e.w;
    l(j, j) += e.w;
  }
  return LaplacianMatrix(std::move(l));
}

Graph cycle_graph(std::size_t T) {
  if (T < 3) {
    throw InputError("cycle graph needs at least 3 vertices (got " + std::to_string(T) +
                     "); T = 2 would be a multi-edge and T = 1 a self-loop");
  }
  std::vector<Edge> edges;
  edges.reserve(T);
  for (std::size_t t = 0; t < T; ++t) {
    edges.push_back({t, (t + 1) % T, 1.0});
  }
  return Graph(T, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.push_back({v, v + 1, 1.0});
  }
  return Graph(n, std::move(edges));
}

Graph star_graph(std::size_t n, std::size_t center) {
  if (center >= n) {
    throw InputError("star center " + std::to_string(center) + " out of range");
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    if (v != center) {
      edges.push_back({center, v, 1.0});
    }
  }
  return Graph(n, std::move(edges));
}

LaplacianMatrix cartesian_laplacian(const LaplacianMatrix& time, const LaplacianMatrix& graph) {
  const Matrix& lt = time.matrix();
  const Matrix& lg = graph.matrix();
  const Eigen::Index T = lt.rows();
  const Eigen::Index N = lg.rows();
  Matrix lj = Matrix::Zero(T * N, T * N);
  for (Eigen::Index t = 0; t < T; ++t) {
    for (Eigen::Index s = 0; s < T; ++s) {
      if (lt(t, s) != 0.0) {
        lj.block(t * N, s * N, N, N).diagonal().array() += lt(t, s);
      }
    }
    lj.block(t * N, t * N, N, N) += lg;
  }
  return LaplacianMatrix(std::move(lj));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (const auto& e : g.edges()) {
    const auto a = find(e.i);
    const auto b = find(e.j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace tvs
