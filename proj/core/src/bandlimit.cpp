#include "tvs/bandlimit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tvs/error.hpp"

namespace tvs {

namespace {

std::string pair_str(FrequencyPair p) {
  return "(" + std::to_string(p.time) + ", " + std::to_string(p.graph) + ")";
}

std::size_t position(const std::vector<std::size_t>& sorted, std::size_t value) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin());
}

}  // namespace

SpectralSupport::SpectralSupport(std::size_t times, std::size_t vertices,
                                 std::vector<FrequencyPair> pairs)
    : times_(times), vertices_(vertices), pairs_(std::move(pairs)) {
  if (times_ == 0 || vertices_ == 0) {
    throw InputError("support dimensions must be positive");
  }
  if (pairs_.empty()) {
    throw InputError("support must contain at least one frequency pair");
  }
  for (const auto& p : pairs_) {
    if (p.time >= times_ || p.graph >= vertices_) {
      throw InputError("frequency pair " + pair_str(p) + " out of range for T = " +
                       std::to_string(times_) + ", N = " + std::to_string(vertices_));
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (auto dup = std::adjacent_find(pairs_.begin(), pairs_.end()); dup != pairs_.end()) {
    throw InputError("duplicate frequency pair " + pair_str(*dup));
  }
  for (const auto& p : pairs_) {
    time_freqs_.push_back(p.time);
    graph_freqs_.push_back(p.graph);
  }
  std::sort(time_freqs_.begin(), time_freqs_.end());
  time_freqs_.erase(std::unique(time_freqs_.begin(), time_freqs_.end()), time_freqs_.end());
  std::sort(graph_freqs_.begin(), graph_freqs_.end());
  graph_freqs_.erase(std::unique(graph_freqs_.begin(), graph_freqs_.end()), graph_freqs_.end());
}

bool SpectralSupport::contains(FrequencyPair p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

SpectralSupport detect_support(const Matrix& xf, double eps) {
  if (!(eps > 0.0)) {
    throw InputError("detect_support: eps must be positive");
  }
  if (xf.size() == 0) {
    throw InputError("detect_support: empty spectrum");
  }
  const double peak = xf.cwiseAbs().maxCoeff();
  if (!(peak > 0.0)) {
    throw InputError("zero signal has no bandwidth");
  }
  const double cutoff = eps * peak;
  std::vector<FrequencyPair> pairs;
  for (Eigen::Index t = 0; t < xf.cols(); ++t) {
    for (Eigen::Index g = 0; g < xf.rows(); ++g) {
      if (std::abs(xf(g, t)) > cutoff) {
        pairs.push_back({static_cast<std::size_t>(t), static_cast<std::size_t>(g)});
      }
    }
  }
  return SpectralSupport(static_cast<std::size_t>(xf.cols()), static_cast<std::size_t>(xf.rows()),
                         std::move(pairs));
}

bool is_sbl(const SpectralSupport& s) {
  return s.time_bandwidth() < s.times() && s.graph_bandwidth() < s.vertices();
}

bool is_gbl(const SpectralSupport& s) {
  return s.bandwidth() < s.times() * s.vertices();
}

ReducedBasis::ReducedBasis(Matrix time, Matrix graph, SpectralSupport support)
    : time_(std::move(time)), graph_(std::move(graph)), support_(std::move(support)) {
  const auto shape = [](const Matrix& m) {
    return std::to_string(m.rows()) + " x " + std::to_string(m.cols());
  };
  if (static_cast<std::size_t>(time_.rows()) != support_.times() ||
      static_cast<std::size_t>(time_.cols()) != support_.time_bandwidth()) {
    throw InputError("reduced time basis is " + shape(time_) + ", expected " +
                     std::to_string(support_.times()) + " x " +
                     std::to_string(support_.time_bandwidth()));
  }
  if (static_cast<std::size_t>(graph_.rows()) != support_.vertices() ||
      static_cast<std::size_t>(graph_.cols()) != support_.graph_bandwidth()) {
    throw InputError("reduced graph basis is " + shape(graph_) + ", expected " +
                     std::to_string(support_.vertices()) + " x " +
                     std::to_string(support_.graph_bandwidth()));
  }
  if (!time_.allFinite() || !graph_.allFinite()) {
    throw InputError("reduced basis has non-finite entries");
  }
}

ReducedBasis restrict_bases(const EigenBasis& time, const EigenBasis& graph,
                            const SpectralSupport& support) {
  if (time.size() != support.times() || graph.size() != support.vertices()) {
    throw InputError("restrict_bases: basis dimensions do not match the support");
  }
  const auto& tf = support.time_frequencies();
  const auto& gf = support.graph_frequencies();
  Matrix ut(time.vectors().rows(), static_cast<Eigen::Index>(tf.size()));
  for (std::size_t k = 0; k < tf.size(); ++k) {
    ut.col(static_cast<Eigen::Index>(k)) = time.vectors().col(static_cast<Eigen::Index>(tf[k]));
  }
  Matrix ug(graph.vectors().rows(), static_cast<Eigen::Index>(gf.size()));
  for (std::size_t k = 0; k < gf.size(); ++k) {
    ug.col(static_cast<Eigen::Index>(k)) = graph.vectors().col(static_cast<Eigen::Index>(gf[k]));
  }
  return ReducedBasis(std::move(ut), std::move(ug), support);
}

Matrix joint_columns(const ReducedBasis& basis) {
  const auto& s = basis.support();
  const auto T = static_cast<Eigen::Index>(s.times());
  const auto N = static_cast<Eigen::Index>(s.vertices());
  Matrix uj(T * N, static_cast<Eigen::Index>(s.bandwidth()));
  Eigen::Index k = 0;
  for (const auto& p : s.pairs()) {
    const auto tc = static_cast<Eigen::Index>(position(s.time_frequencies(), p.time));
    const auto gc = static_cast<Eigen::Index>(position(s.graph_frequencies(), p.graph));
    for (Eigen::Index t = 0; t < T; ++t) {
      uj.col(k).segment(t * N, N) = basis.time()(t, tc) * basis.graph().col(gc);
    }
    ++k;
  }
  return uj;
}

Matrix joint_rows(const ReducedBasis& basis,
                  const std::vector<std::pair<std::size_t, std::size_t>>& points) {
  const auto& s = basis.support();
  std::vector<Eigen::Index> tcol;
  std::vector<Eigen::Index> gcol;
  for (const auto& p : s.pairs()) {
    tcol.push_back(static_cast<Eigen::Index>(position(s.time_frequencies(), p.time)));
    gcol.push_back(static_cast<Eigen::Index>(position(s.graph_frequencies(), p.graph)));
  }
  Matrix rows(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(s.bandwidth()));
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto [t, v] = points[r];
    if (t >= s.times() || v >= s.vertices()) {
      throw InputError("sample point (" + std::to_string(t) + ", " + std::to_string(v) +
                       ") out of range");
    }
    for (std::size_t k = 0; k < tcol.size(); ++k) {
      rows(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
          basis.time()(static_cast<Eigen::Index>(t), tcol[k]) *
          basis.graph()(static_cast<Eigen::Index>(v), gcol[k]);
    }
  }
  return rows;
}

JointSignal synth_signal(const ReducedBasis& basis, const SpectralCoefficients& coeffs) {
  const auto& s = basis.support();
  if (coeffs.size() != s.bandwidth()) {
    throw InputError("synth_signal: expected " + std::to_string(s.bandwidth()) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  Matrix reduced = Matrix::Zero(static_cast<Eigen::Index>(s.graph_bandwidth()),
                                static_cast<Eigen::Index>(s.time_bandwidth()));
  for (const auto& [pair, value] : coeffs) {
    if (!s.contains(pair)) {
      throw InputError("synth_signal: coefficient at " + pair_str(pair) + " is outside the support");
    }
    if (value == 0.0 || !std::isfinite(value)) {
      throw InputError("synth_signal: coefficient at " + pair_str(pair) +
                       " is zero or non-finite; it would shrink the bandwidth");
    }
    reduced(static_cast<Eigen::Index>(position(s.graph_frequencies(), pair.graph)),
            static_cast<Eigen::Index>(position(s.time_frequencies(), pair.time))) = value;
  }
  return JointSignal(basis.graph() * reduced * basis.time().transpose());
}

JointSignal synth_signal(const EigenBasis& time, const EigenBasis& graph,
                         const SpectralSupport& support, const SpectralCoefficients& coeffs) {
  return synth_signal(restrict_bases(time, graph, support), coeffs);
}

}  // namespace tvs
