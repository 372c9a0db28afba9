#pragma once

// The associated bundle V x_{U(r)} C^r, the weighted Z_n-module M and the
// tautological bundle E_M = {(N, z) : z in N}, with the isomorphism
//   f[(v_1, ..., v_r), y] = (<v_1, ..., v_r>, sum_i y_i v_i).
// Classes [(v, y)] are carried as explicit pairs and compared through their
// images under f.

#include <stdexcept>

#include "eqstiefel/stiefel.hpp"

namespace eqs {

template <typename Real = double>
struct BundlePoint {
  Frame<Real> frame;
  ComplexVector<Real> y;

  BundlePoint(Frame<Real> f, ComplexVector<Real> coords) : frame(std::move(f)), y(std::move(coords)) {
    if (y.size() != frame.rank()) throw std::invalid_argument("bundle point: fiber dimension mismatch");
    if (!y.allFinite()) throw std::invalid_argument("bundle point: non-finite fiber coordinate");
  }
};

template <typename Real = double>
struct CanonicalPoint {
  GrassmannPoint<Real> plane;
  ComplexVector<Real> z;

  /// ||P z - z|| relative to ||z||.
  Real membership_residual() const {
    const Real norm = z.norm();
    const Real miss = (plane.projector * z - z).norm();
    return norm > Real(0) ? miss / norm : miss;
  }
};

/// Coordinate k multiplied by gamma^{p k}.
template <typename Real>
ComplexVector<Real> module_action(int n, int p, const ComplexVector<Real>& z) {
  return coordinate_phases<Real>(n, p, z.size()).cwiseProduct(z);
}

/// The induced action P -> D_p P D_p^{-1}, D_p = diag(gamma^{p k}).
template <typename Real>
GrassmannPoint<Real> grassmann_action(int n, int p, const GrassmannPoint<Real>& plane) {
  const ComplexVector<Real> phases = coordinate_phases<Real>(n, p, plane.projector.rows());
  return GrassmannPoint<Real>{phases.asDiagonal() * plane.projector * phases.conjugate().asDiagonal()};
}

template <typename Real>
CanonicalPoint<Real> f_map(const BundlePoint<Real>& pt) {
  return CanonicalPoint<Real>{projector(pt.frame), pt.frame.rows().transpose() * pt.y};
}

/// y_i = <z, v_i>. Throws if the frame does not span cp.plane.
template <typename Real>
BundlePoint<Real> f_inverse(const CanonicalPoint<Real>& cp, const Frame<Real>& frame) {
  if (cp.plane.projector.rows() != frame.truncation())
    throw std::invalid_argument("f_inverse: truncation mismatch");
  const ComplexMatrix<Real> diff = projector(frame).projector - cp.plane.projector;
  if (max_abs(diff) > frame.tolerance()) throw std::invalid_argument("f_inverse: frame does not span the plane");
  return BundlePoint<Real>(frame, frame.rows().conjugate() * cp.z);
}

/// gamma^p.[(v, y)] = [(gamma^p, I).v, y].
template <typename Real>
BundlePoint<Real> gamma_act_bundle(int n, int p, const BundlePoint<Real>& pt) {
  const auto g = GroupElement<Real>::make(n, p, ComplexMatrix<Real>::Identity(pt.frame.rank(), pt.frame.rank()));
  return BundlePoint<Real>(act(g, pt.frame), pt.y);
}

/// The representative (v.a, a^{-1} y) of the same class.
template <typename Real>
BundlePoint<Real> right_translate(const BundlePoint<Real>& pt, const ComplexMatrix<Real>& a) {
  return BundlePoint<Real>(right_act(pt.frame, a), a.adjoint() * pt.y);
}

/// Max-norm distance between two points of E_M.
template <typename Real>
Real canonical_distance(const CanonicalPoint<Real>& a, const CanonicalPoint<Real>& b) {
  return std::max(max_abs(ComplexMatrix<Real>(a.plane.projector - b.plane.projector)),
                  max_abs(ComplexVector<Real>(a.z - b.z)));
}

}  // namespace eqs
