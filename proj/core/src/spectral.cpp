#include "tvs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "tvs/bandlimit.hpp"
#include "tvs/error.hpp"

namespace tvs {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw InputError(std::string(what) + ": dimension mismatch (got " + std::to_string(got) +
                     ", expected " + std::to_string(want) + ")");
  }
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r != c) {
        sum += a(r, c) * a(r, c);
      }
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with a rotation in the (p, q) plane and accumulates it in v.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  if (apq == 0.0) {
    return;
  }
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void fix_sign(Eigen::Ref<Vector> u) {
  const double peak = u.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (std::abs(u(k)) >= peak - 1e-12) {
      if (u(k) < 0.0) {
        u = -u;
      }
      return;
    }
  }
}

}  // namespace

EigenBasis::EigenBasis(Matrix vectors, Vector values)
    : vectors_(std::move(vectors)), values_(std::move(values)) {
  if (vectors_.rows() == 0 || vectors_.rows() != vectors_.cols() ||
      values_.size() != vectors_.rows()) {
    throw InputError("eigenbasis must be n x n with n eigenvalues");
  }
  for (Eigen::Index k = 1; k < values_.size(); ++k) {
    if (values_(k) < values_(k - 1)) {
      throw InputError("eigenvalues must be non-decreasing");
    }
  }
}

JointSignal::JointSignal(Matrix x) : x_(std::move(x)) {
  if (x_.size() == 0) {
    throw InputError("signal must be non-empty");
  }
  if (!x_.allFinite()) {
    throw InputError("signal has non-finite entries");
  }
}

Vector JointSignal::vec() const {
  return Eigen::Map<const Vector>(x_.data(), x_.size());
}

JointSignal JointSignal::from_vec(const Vector& x, std::size_t vertices, std::size_t times) {
  require_dim(static_cast<std::size_t>(x.size()), vertices * times, "JointSignal::from_vec");
  return JointSignal(Eigen::Map<const Matrix>(x.data(), static_cast<Eigen::Index>(vertices),
                                              static_cast<Eigen::Index>(times)));
}

EigenBasis eig_sym(const Matrix& symmetric, const JacobiOptions& options) {
  const Eigen::Index n = symmetric.rows();
  if (n == 0 || n != symmetric.cols()) {
    throw InputError("eig_sym: matrix must be non-empty and square");
  }
  Matrix a = 0.5 * (symmetric + symmetric.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double threshold = options.rel_tol * a.norm();

  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > threshold) {
    if (sweep == options.max_sweeps) {
      throw NumericalError("eig_sym: Jacobi did not converge in " +
                           std::to_string(options.max_sweeps) +
                           " sweeps (off-diagonal residual " + std::to_string(off) + ")");
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        rotate(a, v, p, q);
      }
    }
    ++sweep;
    off = off_diagonal_norm(a);
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  Matrix vectors(n, n);
  Vector values(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    values(k) = a(src, src);
    vectors.col(k) = v.col(src);
    fix_sign(vectors.col(k));
  }
  return EigenBasis(std::move(vectors), std::move(values));
}

EigenBasis eig_sym(const LaplacianMatrix& l, const JacobiOptions& options) {
  return eig_sym(l.matrix(), options);
}

Vector gft(const EigenBasis& basis, const Vector& x) {
  require_dim(static_cast<std::size_t>(x.size()), basis.size(), "gft");
  return basis.vectors().transpose() * x;
}

Vector igft(const EigenBasis& basis, const Vector& xf) {
  require_dim(static_cast<std::size_t>(xf.size()), basis.size(), "igft");
  return basis.vectors() * xf;
}

Matrix jft(const EigenBasis& time, const EigenBasis& graph, const JointSignal& x) {
  require_dim(x.vertices(), graph.size(), "jft (vertices)");
  require_dim(x.times(), time.size(), "jft (time slots)");
  return graph.vectors().transpose() * x.matrix() * time.vectors();
}

JointSignal ijft(const EigenBasis& time, const EigenBasis& graph, const Matrix& xf) {
  require_dim(static_cast<std::size_t>(xf.rows()), graph.size(), "ijft (graph frequencies)");
  require_dim(static_cast<std::size_t>(xf.cols()), time.size(), "ijft (time frequencies)");
  return JointSignal(graph.vectors() * xf * time.vectors().transpose());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

Matrix joint_basis_columns(const EigenBasis& time, const EigenBasis& graph,
                           const SpectralSupport& support) {
  require_dim(support.times(), time.size(), "joint_basis_columns (time)");
  require_dim(support.vertices(), graph.size(), "joint_basis_columns (graph)");
  return joint_columns(restrict_bases(time, graph, support));
}

}  // namespace tvs
