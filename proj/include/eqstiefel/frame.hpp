#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace eqs {

template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
constexpr Real default_frame_tolerance() {
  return Real(1e-10);
}

template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  using R = typename Derived::RealScalar;
  return m.size() == 0 ? R(0) : m.cwiseAbs().maxCoeff();
}

/// A point of the truncated Stiefel manifold V_{r,s}: r orthonormal rows in
/// C^s under <x, y> = sum_k x^k conj(y^k). Column c holds coordinate k = c + 1.
/// Rank 0 is allowed and represents the one-point manifold V_{0,s}.
template <typename Real = double>
class Frame {
 public:
  using Matrix = ComplexMatrix<Real>;

  explicit Frame(Matrix rows, Real tol = default_frame_tolerance<Real>())
      : rows_(std::move(rows)), tol_(tol) {
    if (rows_.rows() > rows_.cols())
      throw std::invalid_argument("frame: rank exceeds truncation");
    const Real residual = orthonormality_residual();
    if (!(residual <= tol_))
      throw std::invalid_argument("frame: rows not orthonormal (residual " +
                                  std::to_string(static_cast<double>(residual)) + ")");
  }

  /// (e_1, ..., e_r) in C^s.
  static Frame standard(Eigen::Index r, Eigen::Index s) {
    return Frame(Matrix::Identity(r, s));
  }

  Eigen::Index rank() const { return rows_.rows(); }
  Eigen::Index truncation() const { return rows_.cols(); }
  const Matrix& rows() const { return rows_; }
  Real tolerance() const { return tol_; }

  /// max |V V^dagger - I|.
  Real orthonormality_residual() const {
    const Eigen::Index r = rows_.rows();
    return max_abs(Matrix(rows_ * rows_.adjoint() - Matrix::Identity(r, r)));
  }

  friend bool operator==(const Frame& a, const Frame& b) { return a.rows_ == b.rows_; }

 private:
  Matrix rows_;
  Real tol_;
};

/// Classical Gram-Schmidt on the rows of `vectors`, preserving the flag of
/// partial spans. Throws std::domain_error when a residual norm falls below
/// rel_tol times the Frobenius norm of the input.
template <typename Real = double>
Frame<Real> gram_schmidt(const ComplexMatrix<Real>& vectors, Real rel_tol = Real(1e-12)) {
  const Eigen::Index r = vectors.rows();
  if (r > vectors.cols()) throw std::domain_error("gram_schmidt: more vectors than dimensions");
  const Real scale = vectors.norm();
  ComplexMatrix<Real> q(r, vectors.cols());
  for (Eigen::Index j = 0; j < r; ++j) {
    ComplexVector<Real> w = vectors.row(j).transpose();
    for (Eigen::Index i = 0; i < j; ++i) {
      // <v_j, q_i> computed against the original v_j (classical variant).
      const std::complex<Real> c = (vectors.row(j) * q.row(i).adjoint())(0, 0);
      w -= c * q.row(i).transpose();
    }
    const Real norm = w.norm();
    if (!(norm > rel_tol * scale)) throw std::domain_error("gram_schmidt: vectors nearly dependent");
    q.row(j) = (w / norm).transpose();
  }
  return Frame<Real>(std::move(q), std::max(default_frame_tolerance<Real>(), Real(100) * rel_tol));
}

}  // namespace eqs
