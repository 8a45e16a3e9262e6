#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "tvs/bandlimit.hpp"
#include "tvs/spectral.hpp"
#include "tvs/types.hpp"

namespace tvs {

/// One joint sample: time slot t at vertex v.
struct SamplePoint {
  std::size_t t{0};
  std::size_t v{0};

  auto operator<=>(const SamplePoint&) const = default;
};

/// A set of joint samples over a T x N time-vertex grid.
///
/// Samples are kept sorted by (t, v). The time and vertex projection sets
/// are derived from the samples on demand; they are never stored.
class SamplingPlan {
public:
  SamplingPlan(std::size_t times, std::size_t vertices, std::vector<SamplePoint> samples);

  std::size_t times() const noexcept { return times_; }
  std::size_t vertices() const noexcept { return vertices_; }
  const std::vector<SamplePoint>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

  /// Time slots touched by at least one sample, ascending.
  std::vector<std::size_t> time_projection() const;
  /// Vertices touched by at least one sample, ascending.
  std::vector<std::size_t> vertex_projection() const;

  /// Per-vertex view: entry v lists the time slots at which vertex v is
  /// sampled (empty for vertices that are never sampled).
  std::vector<std::vector<std::size_t>> schedule() const;

  std::vector<std::pair<std::size_t, std::size_t>> points() const;

  bool operator==(const SamplingPlan&) const = default;

private:
  std::size_t times_;
  std::size_t vertices_;
  std::vector<SamplePoint> samples_;
};

struct QualificationReport {
  std::size_t rank{0};
  bool qualified{false};
  bool critical{false};
  std::size_t samples{0};
  std::size_t time_slots{0};
  std::size_t vertices{0};
  std::size_t bandwidth{0};
  std::size_t time_bandwidth{0};
  std::size_t graph_bandwidth{0};
};

inline constexpr double kRowSelectionEps = 1e-9;

/// Greedy maximal linearly independent rows, scanning top to bottom.
///
/// A row is kept when the part of it orthogonal to the rows kept so far is
/// larger than eps * max(||row||, largest row norm of m). The second term
/// makes rows that are zero up to rounding count as zero. Returns ascending
/// row indices; the count is the numerical rank of m.
std::vector<std::size_t> max_lin_indep_rows(const Matrix& m, double eps = kRowSelectionEps);

/// Intermediate and final products of the critical sampling-set search.
struct CriticalSamplingResult {
  std::vector<std::size_t> time_set;    // S_T
  std::vector<std::size_t> vertex_set;  // S_G
  std::vector<SamplePoint> candidates;  // S_T x S_G in (t, v) order
  Matrix candidate_rows;                // rows of Ũ_J at the candidates
  SamplingPlan plan;
  QualificationReport report;
};

/// Finds a critical sampling set: first the independent rows of the reduced
/// time and graph bases, then the independent rows of Ũ_J restricted to
/// their product. Only the K_T * K_G candidate rows of Ũ_J are formed.
/// Throws TheoryViolation naming the step when a rank falls short.
CriticalSamplingResult critical_sampling_set(const ReducedBasis& basis,
                                             double eps = kRowSelectionEps);

/// Same search with the candidate rows taken from an explicit Ũ_J.
CriticalSamplingResult critical_sampling_set(const ReducedBasis& basis, const Matrix& joint,
                                             double eps = kRowSelectionEps);

/// Rank of Ũ_J restricted to the plan, plus the qualified/critical flags.
QualificationReport qualify(const SamplingPlan& plan, const Matrix& joint,
                            const SpectralSupport& support, double eps = kRowSelectionEps);
QualificationReport qualify(const SamplingPlan& plan, const ReducedBasis& basis,
                            double eps = kRowSelectionEps);

/// Baseline that samples every point of S_T x S_G.
SamplingPlan separate_sampling(const ReducedBasis& basis, double eps = kRowSelectionEps);

/// Signal values at the plan's samples, in plan order.
Vector sample(const JointSignal& x, const SamplingPlan& plan);

struct Reconstruction {
  JointSignal signal;
  Vector coefficients;  // spectral coefficients in support order
  bool least_squares{false};
  double condition{0.0};
};

inline constexpr double kMaxCondition = 1e12;

/// Recovers the full signal from samples on a qualified plan. A square
/// system is solved directly when |S| = K, the normal equations otherwise.
/// Throws TheoryViolation when rank < K, NumericalError when the system's
/// condition estimate exceeds kMaxCondition.
Reconstruction reconstruct(const Vector& values, const SamplingPlan& plan, const Matrix& joint,
                           const SpectralSupport& support, double eps = kRowSelectionEps);
Reconstruction reconstruct(const Vector& values, const SamplingPlan& plan,
                           const ReducedBasis& basis, double eps = kRowSelectionEps);

}  // namespace tvs
