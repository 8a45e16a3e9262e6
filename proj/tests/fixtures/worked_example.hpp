#pragma once

// The 4-slot / 4-vertex worked example: a cycle in time, a star centred on
// vertex 1, and a support with three joint frequencies. Matrices are the
// printed 4-digit values; indices are 0-based.

#include <cmath>
#include <vector>

#include "tvs/bandlimit.hpp"
#include "tvs/graph.hpp"
#include "tvs/sampling.hpp"
#include "tvs/spectral.hpp"
#include "tvs/types.hpp"

namespace fixtures {

inline tvs::Matrix rows(std::initializer_list<std::initializer_list<double>> r) {
  tvs::Matrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (double v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

inline tvs::Matrix time_laplacian() {
  return rows({{2, -1, 0, -1}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {-1, 0, -1, 2}});
}

inline tvs::Matrix graph_laplacian() {
  return rows({{1, -1, 0, 0}, {-1, 3, -1, -1}, {0, -1, 1, 0}, {0, -1, 0, 1}});
}

inline tvs::Matrix signal() {
  return rows({{0.2985, -0.3533, -0.2985, 0.3533},
               {0, 0, 0, 0},
               {-0.1492, 0.5432, 0.1492, -0.5432},
               {-0.1492, -0.1898, 0.1492, 0.1898}});
}

inline tvs::Matrix spectrum() {
  return rows({{0, 0, 0, 0}, {0, 0.733, 0, 0}, {0, 0.612, 0.517, 0}, {0, 0, 0, 0}});
}

inline tvs::Matrix reduced_time() {
  return rows({{0, 0.7071}, {-0.7071, 0}, {0, -0.7071}, {0.7071, 0}});
}

inline tvs::Matrix reduced_graph() {
  return rows({{0, 0.8165}, {0, 0}, {-0.7071, -0.4082}, {0.7071, -0.4082}});
}

// Rows of the reduced joint basis at S_T x S_G.
inline tvs::Matrix candidate_rows() {
  return rows({{0, 0, 0.5774}, {0, 0, -0.2887}, {0, -0.5774, 0}, {0.5, 0.2887, 0}});
}

inline tvs::SpectralSupport support() { return tvs::SpectralSupport(4, 4, {{1, 1}, {1, 2}, {2, 2}}); }

inline tvs::SpectralCoefficients coefficients() {
  return {{{1, 1}, 0.733}, {{1, 2}, 0.612}, {{2, 2}, 0.517}};
}

inline tvs::ReducedBasis reduced_basis() {
  return tvs::ReducedBasis(reduced_time(), reduced_graph(), support());
}

// Full bases: the printed eigenvalue-2 (time) and eigenvalue-1 (graph)
// columns, completed with the exact eigenvectors of eigenvalues 0 and 4.
inline tvs::EigenBasis full_time_basis() {
  tvs::Matrix u(4, 4);
  u.col(0).setConstant(0.5);
  u.middleCols(1, 2) = reduced_time();
  u.col(3) << 0.5, -0.5, 0.5, -0.5;
  tvs::Vector values(4);
  values << 0, 2, 2, 4;
  return tvs::EigenBasis(u, values);
}

inline tvs::EigenBasis full_graph_basis() {
  tvs::Matrix u(4, 4);
  u.col(0).setConstant(0.5);
  u.middleCols(1, 2) = reduced_graph();
  u.col(3) << -1, 3, -1, -1;
  u.col(3) /= std::sqrt(12.0);
  tvs::Vector values(4);
  values << 0, 1, 1, 4;
  return tvs::EigenBasis(u, values);
}

inline std::vector<tvs::SamplePoint> critical_samples() { return {{0, 0}, {1, 0}, {1, 2}}; }
inline std::vector<tvs::SamplePoint> candidate_samples() {
  return {{0, 0}, {0, 2}, {1, 0}, {1, 2}};
}

}  // namespace fixtures
