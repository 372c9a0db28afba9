#pragma once

// Interleaving homotopies C^s -> C^{2s}:
//   even: g_t(v) = (1 - t)(v, 0) + t (0, v_1, 0, v_2, ..., 0, v_s)
//   odd:  g_t(v) = (1 - t)(v, 0) + t (v_1, 0, v_2, 0, ..., v_s, 0)
// and their normalized (sphere) and Gram-Schmidt (frame) versions.

#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "eqstiefel/frame.hpp"
#include "eqstiefel/univariate.hpp"

namespace eqs {

/// 0-based column index that receives coordinate c of v at t = 1.
inline Eigen::Index interleave_slot(Eigen::Index c, Parity parity) {
  return parity == Parity::Even ? 2 * c + 1 : 2 * c;
}

/// Whether 0-based column c lies in the parity subspace (1-indexed k = c + 1
/// even for the even subspace, odd for the odd one).
inline bool in_parity_subspace(Eigen::Index c, Parity parity) {
  return parity == Parity::Even ? (c % 2 == 1) : (c % 2 == 0);
}

template <typename Real>
void require_unit_interval(Real t) {
  if (!(t >= Real(0) && t <= Real(1))) throw std::invalid_argument("homotopy: t must lie in [0, 1]");
}

template <typename Real>
ComplexVector<Real> g(const ComplexVector<Real>& v, Real t, Parity parity) {
  require_unit_interval(t);
  const Eigen::Index s = v.size();
  ComplexVector<Real> out = ComplexVector<Real>::Zero(2 * s);
  out.head(s) = (Real(1) - t) * v;
  for (Eigen::Index c = 0; c < s; ++c) out(interleave_slot(c, parity)) += t * v(c);
  return out;
}

/// g applied to every row.
template <typename Real>
ComplexMatrix<Real> g_rows(const ComplexMatrix<Real>& rows, Real t, Parity parity) {
  ComplexMatrix<Real> out(rows.rows(), 2 * rows.cols());
  for (Eigen::Index j = 0; j < rows.rows(); ++j)
    out.row(j) = g<Real>(rows.row(j).transpose(), t, parity).transpose();
  return out;
}

template <typename Real>
ComplexVector<Real> sphere_G(const ComplexVector<Real>& v, Real t, Parity parity,
                             Real tol = default_frame_tolerance<Real>()) {
  if (!(std::abs(v.norm() - Real(1)) <= tol)) throw std::invalid_argument("sphere_G: input is not a unit vector");
  const ComplexVector<Real> w = g<Real>(v, t, parity);
  return w / w.norm();
}

/// Zero-pads every row to `s` coordinates.
template <typename Real>
Frame<Real> pad(const Frame<Real>& v, Eigen::Index s) {
  if (s < v.truncation()) throw std::invalid_argument("pad: target truncation is smaller");
  ComplexMatrix<Real> rows = ComplexMatrix<Real>::Zero(v.rank(), s);
  rows.leftCols(v.truncation()) = v.rows();
  return Frame<Real>(std::move(rows), v.tolerance());
}

/// G_t(v_1, ..., v_r) = GS(g_t(v_1), ..., g_t(v_r)), a frame in C^{2s}.
template <typename Real>
Frame<Real> G_map(const Frame<Real>& v, Real t, Parity parity) {
  return gram_schmidt<Real>(g_rows<Real>(v.rows(), t, parity));
}

/// Largest |entry| in the coordinates outside the parity subspace.
template <typename Real>
Real parity_leak(const ComplexMatrix<Real>& rows, Parity parity) {
  Real worst = 0;
  for (Eigen::Index c = 0; c < rows.cols(); ++c) {
    if (in_parity_subspace(c, parity)) continue;
    for (Eigen::Index j = 0; j < rows.rows(); ++j) worst = std::max(worst, std::abs(rows(j, c)));
  }
  return worst;
}

/// Smallest eigenvalue of the Gram matrix of (g_t(v_1), ..., g_t(v_r)).
template <typename Real>
Real gram_min_eigenvalue(const Frame<Real>& v, Real t, Parity parity) {
  if (v.rank() == 0) return Real(1);
  const ComplexMatrix<Real> w = g_rows<Real>(v.rows(), t, parity);
  const ComplexMatrix<Real> gram = w * w.adjoint();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix<Real>> eig(gram, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

template <typename Real = double>
struct TracePoint {
  Real t = 0;
  Real orthonormality_residual = 0;
  Real parity_leak = 0;
  Real gram_min_eig = 0;
};

/// Samples t = 0, 1/grid, ..., 1.
template <typename Real>
std::vector<TracePoint<Real>> homotopy_trace(const Frame<Real>& v, Parity parity, int grid) {
  if (grid < 1) throw std::invalid_argument("homotopy_trace: grid must be positive");
  std::vector<TracePoint<Real>> out;
  for (int i = 0; i <= grid; ++i) {
    const Real t = Real(i) / Real(grid);
    const Frame<Real> moved = G_map(v, t, parity);
    out.push_back({t, moved.orthonormality_residual(), parity_leak<Real>(moved.rows(), parity),
                   gram_min_eigenvalue(v, t, parity)});
  }
  return out;
}

}  // namespace eqs
