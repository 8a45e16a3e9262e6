#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures/worked_example.hpp"
#include "tvs/error.hpp"
#include "tvs/oracle.hpp"
#include "tvs/random.hpp"
#include "tvs/sampling.hpp"

using namespace tvs;

namespace {

// Residual of projecting `row` onto the row space of `basis_rows`, by a
// least-squares solve independent of max_lin_indep_rows.
double projection_residual(const Matrix& basis_rows, const Vector& row) {
  if (basis_rows.rows() == 0) {
    return row.norm();
  }
  const Vector coeffs = basis_rows.transpose().colPivHouseholderQr().solve(row);
  return (basis_rows.transpose() * coeffs - row).norm();
}

Matrix select_rows(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(idx[i]));
  }
  return out;
}

std::vector<SamplePoint> full_grid(std::size_t T, std::size_t N) {
  std::vector<SamplePoint> pts;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t v = 0; v < N; ++v) {
      pts.push_back({t, v});
    }
  }
  return pts;
}

SpectralSupport full_support(std::size_t T, std::size_t N) {
  std::vector<FrequencyPair> all;
  for (std::size_t t = 0; t < T; ++t) {
    for (std::size_t g = 0; g < N; ++g) {
      all.push_back({t, g});
    }
  }
  return SpectralSupport(T, N, all);
}

}  // namespace

TEST(MaxLinIndepRows, WorkedExampleTimeBasis) {
  EXPECT_EQ(max_lin_indep_rows(fixtures::reduced_time()), (std::vector<std::size_t>{0, 1}));
}

TEST(MaxLinIndepRows, WorkedExampleGraphBasisSkipsZeroRow) {
  EXPECT_EQ(max_lin_indep_rows(fixtures::reduced_graph()), (std::vector<std::size_t>{0, 2}));
}

TEST(MaxLinIndepRows, Identity) {
  EXPECT_EQ(max_lin_indep_rows(Matrix::Identity(5, 5)),
            (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

TEST(MaxLinIndepRows, ZeroAndRoundoffRows) {
  EXPECT_TRUE(max_lin_indep_rows(Matrix::Zero(3, 2)).empty());
  Matrix m = fixtures::rows({{1e-17, 0}, {0.7, 0.1}, {0.0, 2e-18}, {0.1, 0.3}});
  EXPECT_EQ(max_lin_indep_rows(m), (std::vector<std::size_t>{1, 3}));
}

TEST(MaxLinIndepRows, CandidateRowsPickFirstThirdFourth) {
  EXPECT_EQ(max_lin_indep_rows(fixtures::candidate_rows()), (std::vector<std::size_t>{0, 2, 3}));
}

TEST(MaxLinIndepRows, SelectionCertificateOnRandomMatrices) {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index rows = 1 + static_cast<Eigen::Index>(rng() % 12);
    const Eigen::Index cols = 1 + static_cast<Eigen::Index>(rng() % 8);
    const Eigen::Index inner = 1 + static_cast<Eigen::Index>(rng() % 6);
    // Low-rank matrix with a few exact zero rows.
    Matrix m = Matrix::Random(rows, inner) * Matrix::Random(inner, cols);
    if (rows > 2) {
      m.row(1).setZero();
    }
    const auto picked = max_lin_indep_rows(m);
    EXPECT_TRUE(std::is_sorted(picked.begin(), picked.end()));
    const Matrix chosen = select_rows(m, picked);
    EXPECT_EQ(picked.size(), oracle::rank(m));
    EXPECT_EQ(oracle::rank(chosen), picked.size());
    if (!picked.empty()) {
      EXPECT_GT((chosen * chosen.transpose()).determinant(), 0.0);
    }
    // Every rejected row lies in the span of the rows accepted before it.
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (std::find(picked.begin(), picked.end(), static_cast<std::size_t>(r)) != picked.end()) {
        continue;
      }
      std::vector<std::size_t> before;
      for (auto p : picked) {
        if (p < static_cast<std::size_t>(r)) {
          before.push_back(p);
        }
      }
      EXPECT_LE(projection_residual(select_rows(m, before), m.row(r).transpose()),
                1e-9 * std::max(1.0, m.row(r).norm()));
    }
  }
}

TEST(CriticalSamplingSet, WorkedExample) {
  const auto result = critical_sampling_set(fixtures::reduced_basis());
  EXPECT_EQ(result.time_set, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(result.vertex_set, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(result.candidates, fixtures::candidate_samples());
  EXPECT_LT((result.candidate_rows - fixtures::candidate_rows()).cwiseAbs().maxCoeff(), 1e-3);
  EXPECT_EQ(result.plan.samples(), fixtures::critical_samples());
  EXPECT_TRUE(result.report.critical);
  EXPECT_EQ(result.report.rank, 3u);
}

TEST(CriticalSamplingSet, ExplicitJointBasisGivesSamePlan) {
  const auto basis = fixtures::reduced_basis();
  const auto a = critical_sampling_set(basis);
  const auto b = critical_sampling_set(basis, joint_columns(basis));
  EXPECT_EQ(a.plan, b.plan);
  EXPECT_EQ(a.candidate_rows, b.candidate_rows);
  EXPECT_THROW(critical_sampling_set(basis, Matrix::Zero(16, 2)), InputError);
}

TEST(CriticalSamplingSet, FullSupportNeedsEverySample) {
  const auto tb = eig_sym(fixtures::time_laplacian());
  const auto gb = eig_sym(fixtures::graph_laplacian());
  const auto reduced = restrict_bases(tb, gb, full_support(4, 4));
  const auto result = critical_sampling_set(reduced);
  EXPECT_EQ(result.plan.samples(), full_grid(4, 4));
  EXPECT_TRUE(result.report.critical);
}

TEST(CriticalSamplingSet, RandomSupportsGiveMinimalQualifiedPlans) {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto kind = trial % 2 == 0 ? TimeGraphKind::Cycle : TimeGraphKind::Random;
    const std::size_t T = (kind == TimeGraphKind::Cycle ? 3 : 2) + rng() % 4;
    const std::size_t N = 2 + rng() % 5;
    const auto inst = random_instance(T, N, kind, rng);
    const auto result = critical_sampling_set(inst.reduced);
    const auto& s = inst.support;
    EXPECT_TRUE(result.report.qualified);
    EXPECT_EQ(result.plan.size(), s.bandwidth());
    EXPECT_EQ(result.time_set.size(), s.time_bandwidth());
    EXPECT_EQ(result.vertex_set.size(), s.graph_bandwidth());
    // Samples stay inside S_T x S_G, so the projections can only shrink.
    EXPECT_LE(result.plan.time_projection().size(), s.time_bandwidth());
    EXPECT_LE(result.plan.vertex_projection().size(), s.graph_bandwidth());
    // Second, independent elimination pass.
    EXPECT_EQ(oracle::restricted_rank(joint_columns(inst.reduced), N, result.plan.samples()),
              s.bandwidth());
  }
}

TEST(CriticalSamplingSet, RectangularSupportsAreAlwaysCritical) {
  Rng rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t T = 3 + rng() % 4;
    const std::size_t N = 2 + rng() % 5;
    const std::size_t kt = 1 + rng() % T;
    const std::size_t kg = 1 + rng() % N;
    const auto inst = make_instance(cycle_graph(T), random_connected_graph(N, rng),
                                    random_support(T, N, kt, kg, 1.0, rng));
    const auto result = critical_sampling_set(inst.reduced);
    EXPECT_TRUE(result.report.critical);
    EXPECT_EQ(result.plan.time_projection().size(), kt);
    EXPECT_EQ(result.plan.vertex_projection().size(), kg);
    EXPECT_EQ(result.plan.size(), kt * kg);
  }
}

TEST(CriticalSamplingSet, Deterministic) {
  Rng a(47);
  Rng b(47);
  const auto ia = random_instance(6, 6, TimeGraphKind::Random, a);
  const auto ib = random_instance(6, 6, TimeGraphKind::Random, b);
  EXPECT_EQ(critical_sampling_set(ia.reduced).plan, critical_sampling_set(ib.reduced).plan);
}

TEST(CriticalSamplingSet, RankDeficientInputNamesStep) {
  Matrix bad_time = fixtures::reduced_time();
  bad_time.col(1) = bad_time.col(0);
  const ReducedBasis basis(bad_time, fixtures::reduced_graph(), fixtures::support());
  try {
    critical_sampling_set(basis);
    FAIL() << "expected TheoryViolation";
  } catch (const TheoryViolation& e) {
    EXPECT_NE(std::string(e.what()).find("step 1"), std::string::npos);
  }
}

TEST(Qualify, WorkedExamplePlans) {
  const auto basis = fixtures::reduced_basis();
  const Matrix uj = joint_columns(basis);

  const SamplingPlan critical(4, 4, fixtures::critical_samples());
  const auto r = qualify(critical, uj, basis.support());
  EXPECT_EQ(r.rank, 3u);
  EXPECT_TRUE(r.qualified);
  EXPECT_TRUE(r.critical);

  const SamplingPlan candidates(4, 4, fixtures::candidate_samples());
  const auto rc = qualify(candidates, basis);
  EXPECT_EQ(rc.rank, 3u);
  EXPECT_TRUE(rc.qualified);
  EXPECT_FALSE(rc.critical);
  EXPECT_EQ(rc.samples, 4u);
}

TEST(Qualify, TooFewSamplesIsNeverQualified) {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = random_instance(4, 4, TimeGraphKind::Cycle, rng);
    const auto k = inst.support.bandwidth();
    if (k < 2) {
      continue;
    }
    auto grid = full_grid(4, 4);
    std::shuffle(grid.begin(), grid.end(), rng);
    grid.resize(k - 1);
    EXPECT_FALSE(qualify(SamplingPlan(4, 4, grid), inst.reduced).qualified);
  }
}

TEST(Qualify, DimensionMismatch) {
  EXPECT_THROW(qualify(SamplingPlan(3, 4, {{0, 0}}), fixtures::reduced_basis()), InputError);
}

TEST(SeparateSampling, WorkedExample) {
  const auto plan = separate_sampling(fixtures::reduced_basis());
  EXPECT_EQ(plan.samples(), fixtures::candidate_samples());
  EXPECT_EQ(plan.size(), 4u);
  EXPECT_TRUE(qualify(plan, fixtures::reduced_basis()).qualified);
}

TEST(SeparateSampling, SingleFrequencyEachWay) {
  const auto tb = eig_sym(fixtures::time_laplacian());
  const auto gb = eig_sym(fixtures::graph_laplacian());
  const auto reduced = restrict_bases(tb, gb, SpectralSupport(4, 4, {{1, 2}}));
  const auto sep = separate_sampling(reduced);
  EXPECT_EQ(sep.size(), 1u);
  EXPECT_EQ(sep, critical_sampling_set(reduced).plan);
}

TEST(SeparateSampling, RectangleSupportMatchesCriticalSize) {
  Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto tg = random_connected_graph(6, rng);
    const auto vg = random_connected_graph(5, rng);
    auto support = random_support(6, 5, 1 + rng() % 5, 1 + rng() % 4, 1.0, rng);
    ASSERT_EQ(support.bandwidth(), support.time_bandwidth() * support.graph_bandwidth());
    const auto inst = make_instance(tg, vg, support);
    const auto sep = separate_sampling(inst.reduced);
    const auto crit = critical_sampling_set(inst.reduced);
    EXPECT_EQ(sep.size(), crit.plan.size());
    EXPECT_TRUE(qualify(sep, inst.reduced).critical);
  }
}

TEST(Sample, WorkedExampleValues) {
  const SamplingPlan plan(4, 4, fixtures::critical_samples());
  const Vector y = sample(JointSignal(fixtures::signal()), plan);
  ASSERT_EQ(y.size(), 3);
  EXPECT_DOUBLE_EQ(y(0), 0.2985);
  EXPECT_DOUBLE_EQ(y(1), -0.3533);
  EXPECT_DOUBLE_EQ(y(2), 0.5432);
}

TEST(Sample, ZeroSignalAndFullPlan) {
  const SamplingPlan all(4, 4, full_grid(4, 4));
  EXPECT_EQ(sample(JointSignal(Matrix::Zero(4, 4)), all), Vector::Zero(16));
  const JointSignal x(fixtures::signal());
  EXPECT_EQ(sample(x, all), x.vec());
  EXPECT_THROW(sample(JointSignal(Matrix::Zero(3, 4)), all), InputError);
}

TEST(Reconstruct, WorkedExampleFromPrintedSamples) {
  const SamplingPlan plan(4, 4, fixtures::critical_samples());
  const auto rec = reconstruct(sample(JointSignal(fixtures::signal()), plan), plan,
                               fixtures::reduced_basis());
  EXPECT_FALSE(rec.least_squares);
  EXPECT_LT((rec.signal.matrix() - fixtures::signal()).cwiseAbs().maxCoeff(), 1e-3);
  EXPECT_NEAR(rec.coefficients(0), 0.733, 1e-3);
  EXPECT_NEAR(rec.coefficients(1), 0.612, 1e-3);
  EXPECT_NEAR(rec.coefficients(2), 0.517, 1e-3);
}

TEST(Reconstruct, OverdeterminedPathAgreesWithSquarePath) {
  Rng rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = random_instance(3 + rng() % 4, 2 + rng() % 5, TimeGraphKind::Cycle, rng);
    const auto x = synth_signal(inst.reduced, random_coefficients(inst.support, rng));
    const auto crit = critical_sampling_set(inst.reduced).plan;
    const auto sep = separate_sampling(inst.reduced);
    const auto a = reconstruct(sample(x, crit), crit, inst.reduced);
    const auto b = reconstruct(sample(x, sep), sep, inst.reduced);
    EXPECT_EQ(b.least_squares, sep.size() != inst.support.bandwidth());
    EXPECT_LT((a.signal.matrix() - b.signal.matrix()).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LT((a.signal.matrix() - x.matrix()).norm(), 1e-8 * x.matrix().norm());
  }
}

TEST(Reconstruct, WorkedExampleCandidatePlanUsesLeastSquares) {
  const auto basis = fixtures::reduced_basis();
  const auto x = synth_signal(basis, fixtures::coefficients());
  const SamplingPlan plan(4, 4, fixtures::candidate_samples());
  const auto rec = reconstruct(sample(x, plan), plan, joint_columns(basis), basis.support());
  EXPECT_TRUE(rec.least_squares);
  EXPECT_LT((rec.signal.matrix() - x.matrix()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Reconstruct, FullSupportRoundTrip) {
  Rng rng(67);
  const auto tb = eig_sym(laplacian(random_connected_graph(3, rng)));
  const auto gb = eig_sym(laplacian(random_connected_graph(4, rng)));
  const auto reduced = restrict_bases(tb, gb, full_support(3, 4));
  const JointSignal x(Matrix::Random(4, 3));
  const SamplingPlan all(3, 4, full_grid(3, 4));
  const auto rec = reconstruct(sample(x, all), all, reduced);
  EXPECT_LT((rec.signal.matrix() - x.matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Reconstruct, UnqualifiedPlanIsTheoryViolation) {
  const SamplingPlan plan(4, 4, {{0, 0}, {0, 2}, {1, 0}});
  EXPECT_FALSE(qualify(plan, fixtures::reduced_basis()).qualified);
  try {
    reconstruct(Vector::Zero(3), plan, fixtures::reduced_basis());
    FAIL() << "expected TheoryViolation";
  } catch (const TheoryViolation& e) {
    EXPECT_NE(std::string(e.what()).find("rank 2 < K = 3"), std::string::npos);
  }
}

TEST(Reconstruct, IllConditionedSystemsAreRejected) {
  const SpectralSupport s(1, 3, {{0, 0}, {0, 1}});
  const Matrix joint = fixtures::rows({{1, 1}, {1, 1 + 1e-7}, {1, 1}});
  // Square path: rank passes with a tiny eps, but the 2x2 system is nearly singular.
  const SamplingPlan two(1, 3, {{0, 0}, {0, 1}});
  const Matrix nearly = fixtures::rows({{1, 1}, {1, 1 + 1e-14}, {0, 0}});
  EXPECT_THROW(reconstruct(Vector::Ones(2), two, nearly, s, 1e-16), NumericalError);
  // Least-squares path squares the condition number.
  const SamplingPlan three(1, 3, {{0, 0}, {0, 1}, {0, 2}});
  EXPECT_THROW(reconstruct(Vector::Ones(3), three, joint, s), NumericalError);
}

TEST(Reconstruct, WrongSampleCount) {
  const SamplingPlan plan(4, 4, fixtures::critical_samples());
  EXPECT_THROW(reconstruct(Vector::Zero(2), plan, fixtures::reduced_basis()), InputError);
}

TEST(SamplingPlan, ProjectionsAndSchedule) {
  const SamplingPlan plan(4, 4, {{1, 2}, {0, 0}, {1, 0}});
  EXPECT_EQ(plan.samples(), fixtures::critical_samples());
  EXPECT_EQ(plan.time_projection(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(plan.vertex_projection(), (std::vector<std::size_t>{0, 2}));
  const auto sched = plan.schedule();
  ASSERT_EQ(sched.size(), 4u);
  EXPECT_EQ(sched[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(sched[1].empty());
  EXPECT_EQ(sched[2], (std::vector<std::size_t>{1}));
  EXPECT_TRUE(sched[3].empty());
}

TEST(SamplingPlan, RejectsInvalidSamples) {
  EXPECT_THROW(SamplingPlan(4, 4, {}), InputError);
  EXPECT_THROW(SamplingPlan(4, 4, {{4, 0}}), InputError);
  EXPECT_THROW(SamplingPlan(4, 4, {{0, 4}}), InputError);
  EXPECT_THROW(SamplingPlan(4, 4, {{1, 1}, {1, 1}}), InputError);
}

TEST(SamplingPlan, NestedPlansHaveMonotoneRank) {
  Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(4, 4, TimeGraphKind::Random, rng);
    auto grid = full_grid(4, 4);
    std::shuffle(grid.begin(), grid.end(), rng);
    const std::size_t big = 1 + rng() % 16;
    const std::size_t small = 1 + rng() % big;
    const SamplingPlan s2(4, 4, {grid.begin(), grid.begin() + static_cast<long>(big)});
    const SamplingPlan s1(4, 4, {grid.begin(), grid.begin() + static_cast<long>(small)});
    EXPECT_LE(qualify(s1, inst.reduced).rank, qualify(s2, inst.reduced).rank);
  }
}
