#include "tvs/linalg.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "tvs/error.hpp"

namespace tvs {

LuFactorization::LuFactorization(Matrix a) : lu_(std::move(a)) {
  const Eigen::Index n = lu_.rows();
  if (n == 0 || n != lu_.cols()) {
    throw InputError("LU factorization needs a non-empty square matrix");
  }
  norm1_ = lu_.cwiseAbs().colwise().sum().maxCoeff();
  perm_.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    perm_(i) = static_cast<int>(i);
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    double best = std::abs(lu_(k, k));
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (std::abs(lu_(r, k)) > best) {
        best = std::abs(lu_(r, k));
        pivot = r;
      }
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (pivot != k) {
      lu_.row(k).swap(lu_.row(pivot));
      std::swap(perm_(k), perm_(pivot));
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      lu_(r, k) /= lu_(k, k);
      lu_.row(r).tail(n - k - 1) -= lu_(r, k) * lu_.row(k).tail(n - k - 1);
    }
  }
}

Vector LuFactorization::solve(const Vector& b) const {
  const Eigen::Index n = lu_.rows();
  if (b.size() != n) {
    throw InputError("LU solve: right-hand side has wrong length");
  }
  if (singular_) {
    throw NumericalError("LU solve: matrix is singular");
  }
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) = b(perm_(i));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    x(i) -= lu_.row(i).head(i).dot(x.head(i));
  }
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    x(i) = (x(i) - lu_.row(i).tail(n - i - 1).dot(x.tail(n - i - 1))) / lu_(i, i);
  }
  return x;
}

double LuFactorization::condition() const {
  if (singular_) {
    return std::numeric_limits<double>::infinity();
  }
  const Eigen::Index n = lu_.rows();
  double inv_norm = 0.0;
  for (Eigen::Index c = 0; c < n; ++c) {
    inv_norm = std::max(inv_norm, solve(Vector::Unit(n, c)).cwiseAbs().sum());
  }
  return norm1_ * inv_norm;
}

}  // namespace tvs
