#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "tvs/spectral.hpp"
#include "tvs/types.hpp"

namespace tvs {

/// One joint frequency: time-frequency index and graph-frequency index.
struct FrequencyPair {
  std::size_t time{0};
  std::size_t graph{0};

  auto operator<=>(const FrequencyPair&) const = default;
};

/// Nonzero pattern of a joint spectrum X_f (N x T).
///
/// K is the number of pairs, K_T the number of distinct time frequencies
/// (occupied columns of X_f) and K_G the number of distinct graph
/// frequencies (occupied rows). max(K_T, K_G) <= K <= K_T * K_G holds by
/// construction. Pairs are kept sorted by (time, graph).
class SpectralSupport {
public:
  SpectralSupport(std::size_t times, std::size_t vertices, std::vector<FrequencyPair> pairs);

  std::size_t times() const noexcept { return times_; }
  std::size_t vertices() const noexcept { return vertices_; }
  const std::vector<FrequencyPair>& pairs() const noexcept { return pairs_; }

  std::size_t bandwidth() const noexcept { return pairs_.size(); }
  std::size_t time_bandwidth() const noexcept { return time_freqs_.size(); }
  std::size_t graph_bandwidth() const noexcept { return graph_freqs_.size(); }

  /// Occupied time / graph frequencies, ascending.
  const std::vector<std::size_t>& time_frequencies() const noexcept { return time_freqs_; }
  const std::vector<std::size_t>& graph_frequencies() const noexcept { return graph_freqs_; }

  bool contains(FrequencyPair p) const;

  bool operator==(const SpectralSupport& other) const {
    return times_ == other.times_ && vertices_ == other.vertices_ && pairs_ == other.pairs_;
  }

private:
  std::size_t times_;
  std::size_t vertices_;
  std::vector<FrequencyPair> pairs_;
  std::vector<std::size_t> time_freqs_;
  std::vector<std::size_t> graph_freqs_;
};

inline constexpr double kDefaultSupportEps = 1e-8;

/// Pairs (t, g) with |X_f(g, t)| > eps * max|X_f|. Throws InputError for an
/// all-zero spectrum or eps <= 0.
SpectralSupport detect_support(const Matrix& xf, double eps = kDefaultSupportEps);

/// Simultaneously bandlimited: K_T < T and K_G < N.
bool is_sbl(const SpectralSupport& s);

/// General bandlimited: K < NT.
bool is_gbl(const SpectralSupport& s);

/// Eigenvector columns at the occupied frequencies of a support.
///
/// `time` is T x K_T and `graph` is N x K_G, columns in ascending
/// frequency order. Either restricted from full bases or supplied directly
/// (e.g. from a basis file).
class ReducedBasis {
public:
  ReducedBasis(Matrix time, Matrix graph, SpectralSupport support);

  const Matrix& time() const noexcept { return time_; }
  const Matrix& graph() const noexcept { return graph_; }
  const SpectralSupport& support() const noexcept { return support_; }

private:
  Matrix time_;
  Matrix graph_;
  SpectralSupport support_;
};

ReducedBasis restrict_bases(const EigenBasis& time, const EigenBasis& graph,
                            const SpectralSupport& support);

/// Reduced joint basis Ũ_J (NT x K): column k is the Kronecker product of
/// the time and graph columns of the k-th support pair. Row t*N + v holds
/// the (t, v) sample.
Matrix joint_columns(const ReducedBasis& basis);

/// Rows of Ũ_J at the given (t, v) points only, without forming Ũ_J.
Matrix joint_rows(const ReducedBasis& basis,
                  const std::vector<std::pair<std::size_t, std::size_t>>& points);

using SpectralCoefficients = std::map<FrequencyPair, double>;

/// Joint signal whose spectrum is exactly `coeffs` on the support. The keys
/// must match the support pairs and every coefficient must be nonzero.
JointSignal synth_signal(const ReducedBasis& basis, const SpectralCoefficients& coeffs);
JointSignal synth_signal(const EigenBasis& time, const EigenBasis& graph,
                         const SpectralSupport& support, const SpectralCoefficients& coeffs);

}  // namespace tvs
