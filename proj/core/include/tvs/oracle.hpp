#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvs/bandlimit.hpp"
#include "tvs/sampling.hpp"
#include "tvs/types.hpp"

namespace tvs::oracle {

/// Numerical rank by Gaussian elimination with complete pivoting. Pivots at
/// or below tol * scale * max(rows, cols) count as zero; `scale` defaults to
/// max|a|. Shares no code with max_lin_indep_rows.
std::size_t rank(const Matrix& a, double tol = 1e-9, double scale = 0.0);

/// Rank of the rows of `joint` at the given samples (N vertices per slot),
/// with the cutoff scaled by max|joint|.
std::size_t restricted_rank(const Matrix& joint, std::size_t vertices,
                            const std::vector<SamplePoint>& samples);

struct Violation {
  std::vector<SamplePoint> samples;
  std::string bound;  // which lower bound failed: "|S|>=K", "|S_T|>=K_T", "|S_G|>=K_G"
};

struct ExhaustiveReport {
  std::size_t joint_rank{0};
  std::optional<std::size_t> min_qualified_size;
  std::size_t qualified_at_k{0};
  std::size_t critical_at_k{0};
  bool exists_critical{false};
  std::size_t subsets_checked{0};
  std::vector<Violation> violations;
  /// Every qualified subset of size K; filled only when requested.
  std::vector<std::vector<SamplePoint>> qualified_sets_at_k;
};

inline constexpr std::size_t kMaxExhaustivePoints = 20;

/// Enumerates every sample subset of size 1..max_size of the T x N grid and
/// checks each qualified one against the three lower bounds
/// |S| >= K, |S_T| >= K_T, |S_G| >= K_G. Throws InputError when NT exceeds
/// kMaxExhaustivePoints or max_size exceeds K + 1.
ExhaustiveReport exhaustive_check(const Matrix& joint, const SpectralSupport& support,
                                  std::size_t max_size, bool collect_sets = false);

/// Draws `trials` random nested subsets S1 ⊆ S2 and checks that the rank of
/// the restriction never decreases from S1 to S2. True when no
/// counterexample is found.
bool check_monotonicity(const Matrix& joint, std::size_t vertices, std::size_t trials,
                        std::uint64_t seed);

}  // namespace tvs::oracle
