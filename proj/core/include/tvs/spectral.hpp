#pragma once

#include <cstddef>

#include "tvs/graph.hpp"
#include "tvs/types.hpp"

namespace tvs {

class SpectralSupport;

/// Orthonormal eigenvectors (columns of `vectors()`) with ascending
/// eigenvalues. Built by eig_sym, or directly from known data.
class EigenBasis {
public:
  /// Checks shapes and that `values` is non-decreasing. Orthonormality is
  /// the caller's responsibility when constructing from external data.
  EigenBasis(Matrix vectors, Vector values);

  const Matrix& vectors() const noexcept { return vectors_; }
  const Vector& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(vectors_.rows()); }

private:
  Matrix vectors_;
  Vector values_;
};

/// Time-varying graph signal: an N x T matrix, column t is the graph signal
/// at time slot t. vec() stacks the columns.
class JointSignal {
public:
  explicit JointSignal(Matrix x);

  const Matrix& matrix() const noexcept { return x_; }
  std::size_t vertices() const noexcept { return static_cast<std::size_t>(x_.rows()); }
  std::size_t times() const noexcept { return static_cast<std::size_t>(x_.cols()); }
  double at(std::size_t t, std::size_t v) const {
    return x_(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(t));
  }
  Vector vec() const;
  static JointSignal from_vec(const Vector& x, std::size_t vertices, std::size_t times);

private:
  Matrix x_;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm drops below rel_tol * ||L||_F.
  double rel_tol{1e-12};
  int max_sweeps{100};
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Eigenvalues are returned ascending (stable, so equal eigenvalues keep
/// the rotation order). Each eigenvector is scaled so that its
/// largest-magnitude entry is positive, the lowest index winning ties.
/// Throws NumericalError if the sweep cap is hit.
EigenBasis eig_sym(const Matrix& symmetric, const JacobiOptions& options = {});
EigenBasis eig_sym(const LaplacianMatrix& l, const JacobiOptions& options = {});

Vector gft(const EigenBasis& basis, const Vector& x);
Vector igft(const EigenBasis& basis, const Vector& xf);

/// Joint Fourier transform X_f = U_G^T X U_T. Rows of the result index graph
/// frequencies, columns index time frequencies.
Matrix jft(const EigenBasis& time, const EigenBasis& graph, const JointSignal& x);
JointSignal ijft(const EigenBasis& time, const EigenBasis& graph, const Matrix& xf);

/// Kronecker product a ⊗ b of two dense matrices.
Matrix kron(const Matrix& a, const Matrix& b);

/// Columns of U_T ⊗ U_G at the support's (time, graph) frequency pairs, in
/// the support's canonical order. Only the selected columns are formed.
Matrix joint_basis_columns(const EigenBasis& time, const EigenBasis& graph,
                           const SpectralSupport& support);

}  // namespace tvs
