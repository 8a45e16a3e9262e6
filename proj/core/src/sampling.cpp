#include "tvs/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "tvs/error.hpp"
#include "tvs/linalg.hpp"

namespace tvs {

namespace {

std::string point_str(const SamplePoint& p) {
  return "(" + std::to_string(p.t) + ", " + std::to_string(p.v) + ")";
}

void check_plan_dims(const SamplingPlan& plan, const SpectralSupport& support) {
  if (plan.times() != support.times() || plan.vertices() != support.vertices()) {
    throw InputError("plan is " + std::to_string(plan.times()) + " x " +
                     std::to_string(plan.vertices()) + " but the support is " +
                     std::to_string(support.times()) + " x " + std::to_string(support.vertices()));
  }
}

Matrix rows_of(const Matrix& joint, const SamplingPlan& plan) {
  Matrix out(static_cast<Eigen::Index>(plan.size()), joint.cols());
  Eigen::Index r = 0;
  for (const auto& p : plan.samples()) {
    out.row(r++) = joint.row(static_cast<Eigen::Index>(p.t * plan.vertices() + p.v));
  }
  return out;
}

void check_joint(const Matrix& joint, const SpectralSupport& support) {
  if (static_cast<std::size_t>(joint.rows()) != support.times() * support.vertices() ||
      static_cast<std::size_t>(joint.cols()) != support.bandwidth()) {
    throw InputError("joint basis is " + std::to_string(joint.rows()) + " x " +
                     std::to_string(joint.cols()) + ", expected NT x K = " +
                     std::to_string(support.times() * support.vertices()) + " x " +
                     std::to_string(support.bandwidth()));
  }
}

QualificationReport report_for(const SamplingPlan& plan, const SpectralSupport& support,
                               std::size_t rank) {
  QualificationReport r;
  r.rank = rank;
  r.samples = plan.size();
  r.time_slots = plan.time_projection().size();
  r.vertices = plan.vertex_projection().size();
  r.bandwidth = support.bandwidth();
  r.time_bandwidth = support.time_bandwidth();
  r.graph_bandwidth = support.graph_bandwidth();
  r.qualified = rank == r.bandwidth;
  r.critical = r.qualified && r.samples == r.bandwidth && r.time_slots == r.time_bandwidth &&
               r.vertices == r.graph_bandwidth;
  return r;
}

using RowProvider = std::function<Matrix(const std::vector<SamplePoint>&)>;

CriticalSamplingResult find_critical(const ReducedBasis& basis, const RowProvider& rows,
                                     double eps) {
  const auto& s = basis.support();

  auto time_set = max_lin_indep_rows(basis.time(), eps);
  if (time_set.size() != s.time_bandwidth()) {
    throw TheoryViolation("step 1: reduced time basis has rank " + std::to_string(time_set.size()) +
                          " < K_T = " + std::to_string(s.time_bandwidth()));
  }
  auto vertex_set = max_lin_indep_rows(basis.graph(), eps);
  if (vertex_set.size() != s.graph_bandwidth()) {
    throw TheoryViolation("step 1: reduced graph basis has rank " +
                          std::to_string(vertex_set.size()) +
                          " < K_G = " + std::to_string(s.graph_bandwidth()));
  }

  std::vector<SamplePoint> candidates;
  candidates.reserve(time_set.size() * vertex_set.size());
  for (auto t : time_set) {
    for (auto v : vertex_set) {
      candidates.push_back({t, v});
    }
  }
  Matrix candidate_rows = rows(candidates);

  const auto picked = max_lin_indep_rows(candidate_rows, eps);
  if (picked.size() != s.bandwidth()) {
    throw TheoryViolation("step 3: candidate rows of the joint basis have rank " +
                          std::to_string(picked.size()) + " < K = " +
                          std::to_string(s.bandwidth()));
  }
  std::vector<SamplePoint> chosen;
  chosen.reserve(picked.size());
  for (auto r : picked) {
    chosen.push_back(candidates[r]);
  }
  SamplingPlan plan(s.times(), s.vertices(), std::move(chosen));
  auto report = report_for(plan, s, picked.size());
  return {std::move(time_set), std::move(vertex_set), std::move(candidates),
          std::move(candidate_rows), std::move(plan), report};
}

}  // namespace

SamplingPlan::SamplingPlan(std::size_t times, std::size_t vertices,
                           std::vector<SamplePoint> samples)
    : times_(times), vertices_(vertices), samples_(std::move(samples)) {
  if (times_ == 0 || vertices_ == 0) {
    throw InputError("plan dimensions must be positive");
  }
  if (samples_.empty()) {
    throw InputError("sampling plan must contain at least one sample");
  }
  for (const auto& p : samples_) {
    if (p.t >= times_ || p.v >= vertices_) {
      throw InputError("sample " + point_str(p) + " out of range for T = " +
                       std::to_string(times_) + ", N = " + std::to_string(vertices_));
    }
  }
  std::sort(samples_.begin(), samples_.end());
  if (auto dup = std::adjacent_find(samples_.begin(), samples_.end()); dup != samples_.end()) {
    throw InputError("duplicate sample " + point_str(*dup));
  }
}

std::vector<std::size_t> SamplingPlan::time_projection() const {
  std::vector<std::size_t> out;
  for (const auto& p : samples_) {
    if (out.empty() || out.back() != p.t) {
      out.push_back(p.t);
    }
  }
  return out;
}

std::vector<std::size_t> SamplingPlan::vertex_projection() const {
  std::vector<std::size_t> out;
  for (const auto& p : samples_) {
    out.push_back(p.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> SamplingPlan::schedule() const {
  std::vector<std::vector<std::size_t>> out(vertices_);
  for (const auto& p : samples_) {
    out[p.v].push_back(p.t);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SamplingPlan::points() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(samples_.size());
  for (const auto& p : samples_) {
    out.emplace_back(p.t, p.v);
  }
  return out;
}

std::vector<std::size_t> max_lin_indep_rows(const Matrix& m, double eps) {
  std::vector<std::size_t> picked;
  if (m.rows() == 0 || m.cols() == 0) {
    return picked;
  }
  const Vector norms = m.rowwise().norm();
  const double largest = norms.maxCoeff();
  if (!(largest > 0.0)) {
    return picked;
  }
  const Eigen::Index cols = m.cols();
  // Orthonormal basis of the accepted rows, one per column of q.
  Matrix q(cols, std::min<Eigen::Index>(cols, m.rows()));
  Vector residual(cols);
  Vector coeffs(q.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    residual = m.row(r).transpose();
    for (int pass = 0; pass < 2 && rank > 0; ++pass) {
      coeffs.head(rank).noalias() = q.leftCols(rank).transpose() * residual;
      residual.noalias() -= q.leftCols(rank) * coeffs.head(rank);
    }
    const double size = residual.norm();
    if (size > eps * std::max(norms(r), largest)) {
      q.col(rank++) = residual / size;
      picked.push_back(static_cast<std::size_t>(r));
    }
  }
  return picked;
}

CriticalSamplingResult critical_sampling_set(const ReducedBasis& basis, double eps) {
  return find_critical(
      basis,
      [&](const std::vector<SamplePoint>& pts) {
        std::vector<std::pair<std::size_t, std::size_t>> tv;
        tv.reserve(pts.size());
        for (const auto& p : pts) {
          tv.emplace_back(p.t, p.v);
        }
        return joint_rows(basis, tv);
      },
      eps);
}

CriticalSamplingResult critical_sampling_set(const ReducedBasis& basis, const Matrix& joint,
                                             double eps) {
  check_joint(joint, basis.support());
  const std::size_t n = basis.support().vertices();
  return find_critical(
      basis,
      [&](const std::vector<SamplePoint>& pts) {
        Matrix out(static_cast<Eigen::Index>(pts.size()), joint.cols());
        for (std::size_t r = 0; r < pts.size(); ++r) {
          out.row(static_cast<Eigen::Index>(r)) =
              joint.row(static_cast<Eigen::Index>(pts[r].t * n + pts[r].v));
        }
        return out;
      },
      eps);
}

QualificationReport qualify(const SamplingPlan& plan, const Matrix& joint,
                            const SpectralSupport& support, double eps) {
  check_plan_dims(plan, support);
  check_joint(joint, support);
  const auto rank = max_lin_indep_rows(rows_of(joint, plan), eps).size();
  return report_for(plan, support, rank);
}

QualificationReport qualify(const SamplingPlan& plan, const ReducedBasis& basis, double eps) {
  check_plan_dims(plan, basis.support());
  const auto rank = max_lin_indep_rows(joint_rows(basis, plan.points()), eps).size();
  return report_for(plan, basis.support(), rank);
}

SamplingPlan separate_sampling(const ReducedBasis& basis, double eps) {
  const auto time_set = max_lin_indep_rows(basis.time(), eps);
  const auto vertex_set = max_lin_indep_rows(basis.graph(), eps);
  std::vector<SamplePoint> pts;
  for (auto t : time_set) {
    for (auto v : vertex_set) {
      pts.push_back({t, v});
    }
  }
  return SamplingPlan(basis.support().times(), basis.support().vertices(), std::move(pts));
}

Vector sample(const JointSignal& x, const SamplingPlan& plan) {
  if (x.times() != plan.times() || x.vertices() != plan.vertices()) {
    throw InputError("signal is " + std::to_string(x.vertices()) + " x " +
                     std::to_string(x.times()) + " (N x T) but the plan expects " +
                     std::to_string(plan.vertices()) + " x " + std::to_string(plan.times()));
  }
  Vector out(static_cast<Eigen::Index>(plan.size()));
  Eigen::Index r = 0;
  for (const auto& p : plan.samples()) {
    out(r++) = x.at(p.t, p.v);
  }
  return out;
}

namespace {

Reconstruction solve_restricted(const Vector& values, const SamplingPlan& plan,
                                const Matrix& restricted, const SpectralSupport& support,
                                const std::function<Vector(const Vector&)>& expand, double eps) {
  if (static_cast<std::size_t>(values.size()) != plan.size()) {
    throw InputError("got " + std::to_string(values.size()) + " sample values for a plan of " +
                     std::to_string(plan.size()) + " samples");
  }
  const auto rank = max_lin_indep_rows(restricted, eps).size();
  if (rank < support.bandwidth()) {
    throw TheoryViolation("plan is not qualified: rank " + std::to_string(rank) + " < K = " +
                          std::to_string(support.bandwidth()) +
                          "; perfect recovery is impossible");
  }
  const bool least_squares = plan.size() != support.bandwidth();
  const Matrix system =
      least_squares ? Matrix(restricted.transpose() * restricted) : restricted;
  const Vector rhs = least_squares ? Vector(restricted.transpose() * values) : values;

  LuFactorization lu(system);
  const double cond = lu.condition();
  if (!(cond <= kMaxCondition)) {
    throw NumericalError("reconstruction system is ill-conditioned (condition estimate " +
                         std::to_string(cond) + ")");
  }
  Vector coeffs = lu.solve(rhs);
  Vector x = expand(coeffs);
  return {JointSignal::from_vec(x, support.vertices(), support.times()), std::move(coeffs),
          least_squares, cond};
}

}  // namespace

Reconstruction reconstruct(const Vector& values, const SamplingPlan& plan, const Matrix& joint,
                           const SpectralSupport& support, double eps) {
  check_plan_dims(plan, support);
  check_joint(joint, support);
  return solve_restricted(
      values, plan, rows_of(joint, plan), support,
      [&](const Vector& c) { return Vector(joint * c); }, eps);
}

Reconstruction reconstruct(const Vector& values, const SamplingPlan& plan,
                           const ReducedBasis& basis, double eps) {
  check_plan_dims(plan, basis.support());
  return solve_restricted(
      values, plan, joint_rows(basis, plan.points()), basis.support(),
      [&](const Vector& c) { return Vector(joint_columns(basis) * c); }, eps);
}

}  // namespace tvs
