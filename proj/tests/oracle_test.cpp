#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures/worked_example.hpp"
#include "tvs/error.hpp"
#include "tvs/oracle.hpp"
#include "tvs/random.hpp"
#include "tvs/sampling.hpp"

using namespace tvs;

TEST(OracleRank, SmallCases) {
  EXPECT_EQ(oracle::rank(Matrix::Identity(4, 4)), 4u);
  EXPECT_EQ(oracle::rank(Matrix::Zero(3, 2)), 0u);
  EXPECT_EQ(oracle::rank(Matrix(0, 3)), 0u);
  EXPECT_EQ(oracle::rank(fixtures::rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}})), 2u);
  EXPECT_EQ(oracle::rank(fixtures::candidate_rows()), 3u);
}

TEST(OracleRank, AgreesWithReferenceOnRandomLowRank) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng() % 6);
    const Matrix m = Matrix::Random(8, r) * Matrix::Random(r, 7);
    Eigen::FullPivLU<Matrix> lu(m);
    lu.setThreshold(1e-9);
    EXPECT_EQ(oracle::rank(m), static_cast<std::size_t>(lu.rank()));
  }
}

TEST(ExhaustiveCheck, WorkedExample) {
  const auto basis = fixtures::reduced_basis();
  const Matrix uj = joint_columns(basis);
  const auto report = oracle::exhaustive_check(uj, basis.support(), 4, true);
  EXPECT_EQ(report.joint_rank, 3u);
  ASSERT_TRUE(report.min_qualified_size.has_value());
  EXPECT_EQ(*report.min_qualified_size, 3u);
  EXPECT_TRUE(report.violations.empty());
  EXPECT_TRUE(report.exists_critical);
  // Frozen from an independent numpy enumeration over all 560 triples.
  EXPECT_EQ(report.qualified_at_k, 72u);
  EXPECT_EQ(report.critical_at_k, 24u);
  EXPECT_EQ(report.subsets_checked, 16u + 120u + 560u + 1820u);

  const auto plan = critical_sampling_set(basis).plan;
  EXPECT_NE(std::find(report.qualified_sets_at_k.begin(), report.qualified_sets_at_k.end(),
                      plan.samples()),
            report.qualified_sets_at_k.end());
}

TEST(ExhaustiveCheck, SinglePairSupport) {
  const auto tb = eig_sym(fixtures::time_laplacian());
  const auto gb = eig_sym(fixtures::graph_laplacian());
  const auto reduced = restrict_bases(tb, gb, SpectralSupport(4, 4, {{2, 1}}));
  const Matrix uj = joint_columns(reduced);
  const auto report = oracle::exhaustive_check(uj, reduced.support(), 2);
  EXPECT_EQ(report.min_qualified_size, 1u);
  std::size_t nonzero = 0;
  for (Eigen::Index r = 0; r < uj.rows(); ++r) {
    nonzero += std::abs(uj(r, 0)) > 1e-9 ? 1 : 0;
  }
  EXPECT_EQ(report.qualified_at_k, nonzero);
  EXPECT_TRUE(report.violations.empty());
}

TEST(ExhaustiveCheck, RectangularSupportsMeetAllBounds) {
  Rng rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto tg = random_connected_graph(4, rng);
    const auto vg = random_connected_graph(4, rng);
    const std::size_t kt = 1 + rng() % 3;
    const std::size_t kg = 1 + rng() % 3;
    const auto inst = make_instance(tg, vg, random_support(4, 4, kt, kg, 1.0, rng));
    const auto& s = inst.support;
    ASSERT_EQ(s.bandwidth(), kt * kg);
    const auto report =
        oracle::exhaustive_check(joint_columns(inst.reduced), s, s.bandwidth() + 1, true);
    EXPECT_TRUE(report.violations.empty());
    EXPECT_EQ(report.min_qualified_size, s.bandwidth());
    EXPECT_TRUE(report.exists_critical);
    EXPECT_GT(report.critical_at_k, 0u);
    EXPECT_LE(report.critical_at_k, report.qualified_at_k);
    const auto plan = critical_sampling_set(inst.reduced).plan;
    EXPECT_NE(std::find(report.qualified_sets_at_k.begin(), report.qualified_sets_at_k.end(),
                        plan.samples()),
              report.qualified_sets_at_k.end());
  }
}

TEST(ExhaustiveCheck, NoQualifiedSetBelowK) {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = random_instance(4, 4, TimeGraphKind::Random, rng);
    const auto& s = inst.support;
    const auto report =
        oracle::exhaustive_check(joint_columns(inst.reduced), s, s.bandwidth() + 1, true);
    EXPECT_EQ(report.min_qualified_size, s.bandwidth());
    for (const auto& v : report.violations) {
      EXPECT_NE(v.bound, "|S|>=K");
    }
    const auto plan = critical_sampling_set(inst.reduced).plan;
    EXPECT_NE(std::find(report.qualified_sets_at_k.begin(), report.qualified_sets_at_k.end(),
                        plan.samples()),
              report.qualified_sets_at_k.end());
  }
}

// Off the K_T x K_G rectangle the projection bounds do not hold: two
// frequencies on a diagonal are recovered from one time slot.
TEST(ExhaustiveCheck, ProjectionBoundsNeedRectangularSupport) {
  const SpectralSupport s(4, 4, {{0, 1}, {1, 2}});
  const auto reduced = restrict_bases(fixtures::full_time_basis(), fixtures::full_graph_basis(), s);
  const Matrix uj = joint_columns(reduced);
  EXPECT_EQ(oracle::restricted_rank(uj, 4, {{1, 0}, {1, 2}}), 2u);

  const auto report = oracle::exhaustive_check(uj, s, 3);
  EXPECT_EQ(report.min_qualified_size, 2u);
  const auto it = std::find_if(report.violations.begin(), report.violations.end(),
                               [](const oracle::Violation& v) { return v.bound == "|S_T|>=K_T"; });
  EXPECT_NE(it, report.violations.end());
}

TEST(ExhaustiveCheck, BandwidthChainWitnesses) {
  Rng rng(19);
  const auto tg = random_connected_graph(4, rng);
  const auto vg = random_connected_graph(4, rng);
  // K = max(K_T, K_G): one time frequency, three graph frequencies.
  const auto row = make_instance(tg, vg, SpectralSupport(4, 4, {{1, 0}, {1, 2}, {1, 3}}));
  // K = K_T * K_G: full 2 x 2 rectangle.
  const auto rect = make_instance(tg, vg, SpectralSupport(4, 4, {{0, 1}, {0, 2}, {3, 1}, {3, 2}}));
  for (const auto* inst : {&row, &rect}) {
    const auto& s = inst->support;
    const auto report =
        oracle::exhaustive_check(joint_columns(inst->reduced), s, s.bandwidth() + 1);
    EXPECT_TRUE(report.violations.empty());
    EXPECT_EQ(report.min_qualified_size, s.bandwidth());
    EXPECT_TRUE(report.exists_critical);
  }
  EXPECT_EQ(row.support.bandwidth(),
            std::max(row.support.time_bandwidth(), row.support.graph_bandwidth()));
  EXPECT_EQ(rect.support.bandwidth(),
            rect.support.time_bandwidth() * rect.support.graph_bandwidth());
}

TEST(ExhaustiveCheck, Guards) {
  const auto basis = fixtures::reduced_basis();
  const Matrix uj = joint_columns(basis);
  EXPECT_THROW(oracle::exhaustive_check(uj, basis.support(), 5), InputError);

  Rng rng(2);
  const auto big = random_instance(5, 5, TimeGraphKind::Cycle, rng);
  try {
    oracle::exhaustive_check(joint_columns(big.reduced), big.support, 1);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("NT <= 20"), std::string::npos);
  }
}

TEST(CheckMonotonicity, WorkedExample) {
  const Matrix uj = joint_columns(fixtures::reduced_basis());
  EXPECT_TRUE(oracle::check_monotonicity(uj, 4, 1000, 1));
}

TEST(CheckMonotonicity, EqualAndEmptySets) {
  const Matrix uj = joint_columns(fixtures::reduced_basis());
  const std::vector<SamplePoint> s = fixtures::candidate_samples();
  EXPECT_EQ(oracle::restricted_rank(uj, 4, s), oracle::restricted_rank(uj, 4, s));
  EXPECT_EQ(oracle::restricted_rank(uj, 4, {}), 0u);
  EXPECT_EQ(oracle::restricted_rank(uj, 4, s), 3u);
}

TEST(CheckMonotonicity, RandomInstances) {
  Rng rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = random_instance(4, 5, TimeGraphKind::Cycle, rng);
    EXPECT_TRUE(oracle::check_monotonicity(joint_columns(inst.reduced), 5, 100, rng()));
  }
}
