#pragma once

#include "tvs/types.hpp"

namespace tvs {

/// LU factorization with partial pivoting, PA = LU.
class LuFactorization {
public:
  explicit LuFactorization(Matrix a);

  bool singular() const noexcept { return singular_; }
  Vector solve(const Vector& b) const;

  /// 1-norm condition number ||A||_1 ||A^-1||_1, computed from the factors.
  /// Infinity when singular.
  double condition() const;

private:
  Matrix lu_;
  Eigen::VectorXi perm_;
  double norm1_{0.0};
  bool singular_{false};
};

}  // namespace tvs
