#include "tvs/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "tvs/error.hpp"

namespace tvs::oracle {

std::size_t rank(const Matrix& a, double tol, double scale) {
  if (a.size() == 0) {
    return 0;
  }
  Matrix m = a;
  if (!(scale > 0.0)) {
    scale = m.cwiseAbs().maxCoeff();
  }
  if (!(scale > 0.0)) {
    return 0;
  }
  const double cutoff = tol * scale * static_cast<double>(std::max(m.rows(), m.cols()));
  const Eigen::Index steps = std::min(m.rows(), m.cols());
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < steps; ++k) {
    Eigen::Index pr = 0;
    Eigen::Index pc = 0;
    const double pivot = m.bottomRightCorner(m.rows() - k, m.cols() - k).cwiseAbs().maxCoeff(&pr, &pc);
    if (pivot <= cutoff) {
      break;
    }
    m.row(k).swap(m.row(k + pr));
    m.col(k).swap(m.col(k + pc));
    for (Eigen::Index i = k + 1; i < m.rows(); ++i) {
      const double f = m(i, k) / m(k, k);
      for (Eigen::Index j = k; j < m.cols(); ++j) {
        m(i, j) -= f * m(k, j);
      }
    }
    ++r;
  }
  return r;
}

std::size_t restricted_rank(const Matrix& joint, std::size_t vertices,
                            const std::vector<SamplePoint>& samples) {
  if (samples.empty()) {
    return 0;
  }
  Matrix rows(static_cast<Eigen::Index>(samples.size()), joint.cols());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) =
        joint.row(static_cast<Eigen::Index>(samples[i].t * vertices + samples[i].v));
  }
  // Measure pivots against the whole basis, so a numerically zero row is not
  // promoted to rank 1 just because it is the only row.
  return rank(rows, 1e-9, joint.cwiseAbs().maxCoeff());
}

ExhaustiveReport exhaustive_check(const Matrix& joint, const SpectralSupport& support,
                                  std::size_t max_size, bool collect_sets) {
  const std::size_t T = support.times();
  const std::size_t N = support.vertices();
  const std::size_t K = support.bandwidth();
  const std::size_t points = T * N;
  if (points > kMaxExhaustivePoints) {
    throw InputError("exhaustive search needs NT <= " + std::to_string(kMaxExhaustivePoints) +
                     " (got " + std::to_string(points) + ")");
  }
  if (max_size > K + 1) {
    throw InputError("exhaustive search needs max subset size <= K + 1 = " +
                     std::to_string(K + 1) + " (got " + std::to_string(max_size) + ")");
  }
  if (static_cast<std::size_t>(joint.rows()) != points ||
      static_cast<std::size_t>(joint.cols()) != K) {
    throw InputError("joint basis shape does not match the support");
  }

  ExhaustiveReport report;
  report.joint_rank = rank(joint);

  std::vector<SamplePoint> grid;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t v = 0; v < N; ++v) {
      grid.push_back({t, v});
    }
  }

  for (std::size_t size = 1; size <= std::min(max_size, points); ++size) {
    // Lexicographic enumeration of size-element index combinations.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) {
      idx[i] = i;
    }
    while (true) {
      std::vector<SamplePoint> subset;
      subset.reserve(size);
      for (auto i : idx) {
        subset.push_back(grid[i]);
      }
      ++report.subsets_checked;
      if (restricted_rank(joint, N, subset) == K) {
        if (!report.min_qualified_size) {
          report.min_qualified_size = size;
        }
        std::vector<std::size_t> ts;
        std::vector<std::size_t> vs;
        for (const auto& p : subset) {
          ts.push_back(p.t);
          vs.push_back(p.v);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

        if (size < K) {
          report.violations.push_back({subset, "|S|>=K"});
        }
        if (ts.size() < support.time_bandwidth()) {
          report.violations.push_back({subset, "|S_T|>=K_T"});
        }
        if (vs.size() < support.graph_bandwidth()) {
          report.violations.push_back({subset, "|S_G|>=K_G"});
        }
        if (size == K) {
          ++report.qualified_at_k;
          if (ts.size() == support.time_bandwidth() && vs.size() == support.graph_bandwidth()) {
            ++report.critical_at_k;
            report.exists_critical = true;
          }
          if (collect_sets) {
            report.qualified_sets_at_k.push_back(subset);
          }
        }
      }

      std::size_t i = size;
      while (i > 0 && idx[i - 1] == points - size + (i - 1)) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return report;
}

bool check_monotonicity(const Matrix& joint, std::size_t vertices, std::size_t trials,
                        std::uint64_t seed) {
  const auto points = static_cast<std::size_t>(joint.rows());
  if (points > kMaxExhaustivePoints) {
    throw InputError("monotonicity check needs NT <= " + std::to_string(kMaxExhaustivePoints));
  }
  if (vertices == 0 || points % vertices != 0) {
    throw InputError("vertex count does not divide the joint basis rows");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const double outer = unit(rng);
    const double inner = unit(rng);
    std::vector<SamplePoint> big;
    std::vector<SamplePoint> small;
    for (std::size_t i = 0; i < points; ++i) {
      if (unit(rng) < outer) {
        const SamplePoint p{i / vertices, i % vertices};
        big.push_back(p);
        if (unit(rng) < inner) {
          small.push_back(p);
        }
      }
    }
    if (restricted_rank(joint, vertices, small) > restricted_rank(joint, vertices, big)) {
      return false;
    }
  }
  return true;
}

}  // namespace tvs::oracle
