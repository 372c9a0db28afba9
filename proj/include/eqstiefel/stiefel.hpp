#pragma once

// The left Z_n x U(r) action on truncated Stiefel manifolds,
//   (gamma^p, a).(v_1, ..., v_r) = (w_1, ..., w_r),
//   w_j^k = gamma^{p k} sum_i conj(a_ji) v_i^k,  gamma = exp(2 pi i / n),
// the right U(r) action v.a = (1, a^{-1}).v, the Grassmannian projection and
// the fixed sets of the subgroups H_{d,s}.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "eqstiefel/family.hpp"
#include "eqstiefel/frame.hpp"
#include "eqstiefel/roots.hpp"

namespace eqs {

template <typename Real>
bool is_unitary(const ComplexMatrix<Real>& a, Real tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(ComplexMatrix<Real>(a * a.adjoint() -
                                     ComplexMatrix<Real>::Identity(a.rows(), a.rows()))) <= tol;
}

/// (gamma^p, a) in Z_n x U(r).
template <typename Real = double>
struct GroupElement {
  int n = 1;
  int p = 0;
  ComplexMatrix<Real> a;

  static GroupElement make(int n, int p, ComplexMatrix<Real> a,
                           Real tol = default_frame_tolerance<Real>()) {
    if (n < 1) throw std::invalid_argument("group element: n must be positive");
    if (!is_unitary(a, tol)) throw std::invalid_argument("group element: matrix is not unitary");
    const int rem = p % n;
    return GroupElement{n, rem < 0 ? rem + n : rem, std::move(a)};
  }

  static GroupElement identity(int n, Eigen::Index r) {
    return GroupElement{n, 0, ComplexMatrix<Real>::Identity(r, r)};
  }

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.n != h.n || g.a.rows() != h.a.rows())
      throw std::invalid_argument("group element: dimension mismatch");
    return GroupElement{g.n, (g.p + h.p) % g.n, g.a * h.a};
  }

  GroupElement inverse() const { return GroupElement{n, (n - p) % n, a.adjoint()}; }
};

/// diag(gamma^{p k}), k = 1..s.
template <typename Real = double>
ComplexVector<Real> coordinate_phases(int n, int p, Eigen::Index s) {
  ComplexVector<Real> phases(s);
  for (Eigen::Index c = 0; c < s; ++c)
    phases(c) = unit_root<Real>(static_cast<long long>(p) * (c + 1), n);
  return phases;
}

template <typename Real>
Frame<Real> act(const GroupElement<Real>& g, const Frame<Real>& v) {
  if (g.a.rows() != v.rank()) throw std::invalid_argument("act: rank mismatch");
  ComplexMatrix<Real> w = g.a.conjugate() * v.rows();
  w *= coordinate_phases<Real>(g.n, g.p, v.truncation()).asDiagonal();
  return Frame<Real>(std::move(w), v.tolerance());
}

/// Row j of the result is sum_i a_ij v_i, i.e. act((1, a^{-1}), v).
template <typename Real>
Frame<Real> right_act(const Frame<Real>& v, const ComplexMatrix<Real>& a) {
  if (a.rows() != v.rank()) throw std::invalid_argument("right_act: rank mismatch");
  if (!is_unitary(a, v.tolerance())) throw std::invalid_argument("right_act: matrix is not unitary");
  return Frame<Real>(a.transpose() * v.rows(), v.tolerance());
}

/// Orthogonal projector onto the span of a frame.
template <typename Real = double>
struct GrassmannPoint {
  ComplexMatrix<Real> projector;

  Real hermitian_residual() const { return max_abs(ComplexMatrix<Real>(projector - projector.adjoint())); }
  Real idempotent_residual() const {
    return max_abs(ComplexMatrix<Real>(projector * projector - projector));
  }
  Real rank_residual(Eigen::Index r) const {
    return std::abs(projector.trace().real() - Real(r)) + std::abs(projector.trace().imag());
  }
  bool valid(Eigen::Index r, Real tol) const {
    return hermitian_residual() <= tol && idempotent_residual() <= tol && rank_residual(r) <= tol;
  }
};

/// P = sum_j |v_j><v_j|, constant on right U(r)-orbits.
template <typename Real>
GrassmannPoint<Real> projector(const Frame<Real>& v) {
  return GrassmannPoint<Real>{v.rows().transpose() * v.rows().conjugate()};
}

/// The generator (lambda, rho(lambda)) of h as a group element.
template <typename Real = double>
GroupElement<Real> generator_element(const SubgroupRep& h) {
  return GroupElement<Real>{h.n, h.generator_power() % h.n, rho_matrix<Real>(h)};
}

using SupportMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// mask(j, k-1) is true iff k = m_j (mod d).
inline SupportMask fixed_support_pattern(const SubgroupRep& h, Eigen::Index s) {
  if (s < 1) throw std::invalid_argument("fixed_support_pattern: s must be positive");
  SupportMask mask(h.r, s);
  for (int j = 0; j < h.r; ++j) {
    for (Eigen::Index c = 0; c < s; ++c) mask(j, c) = ((c + 1) - h.m[j]) % h.d == 0;
  }
  return mask;
}

/// Largest |v_j^k| over positions outside the fixed support pattern.
template <typename Real>
Real off_pattern_max(const Frame<Real>& v, const SubgroupRep& h) {
  if (v.rank() != h.r) throw std::invalid_argument("off_pattern_max: rank mismatch");
  const SupportMask mask = fixed_support_pattern(h, v.truncation());
  Real worst = 0;
  for (Eigen::Index j = 0; j < v.rank(); ++j) {
    for (Eigen::Index c = 0; c < v.truncation(); ++c) {
      if (!mask(j, c)) worst = std::max(worst, std::abs(v.rows()(j, c)));
    }
  }
  return worst;
}

/// True iff the generator of h moves v by at most tol in max norm.
template <typename Real>
bool is_fixed(const Frame<Real>& v, const SubgroupRep& h, Real tol = Real(1e-12)) {
  if (v.rank() != h.r) throw std::invalid_argument("is_fixed: rank mismatch");
  const Frame<Real> moved = act(generator_element<Real>(h), v);
  return max_abs(ComplexMatrix<Real>(moved.rows() - v.rows())) <= tol;
}

/// One factor V_{rank, dimension} of the fixed set.
struct FixedFactor {
  int rank = 0;
  int dimension = 0;

  friend bool operator==(const FixedFactor&, const FixedFactor&) = default;
};

/// For each weight class i = 1..d: rank s_i = #{j : m_j = i} and dimension
/// c_i = #{k <= s : k = i mod d}. The fixed set of V_{r,s} is the product of
/// the V_{s_i, c_i}, empty when some s_i > c_i.
inline std::vector<FixedFactor> fixed_point_factors(const SubgroupRep& h, int s) {
  if (s < 1) throw std::invalid_argument("fixed_point_factors: s must be positive");
  std::vector<FixedFactor> factors(h.d);
  for (int w : h.m) ++factors[w - 1].rank;
  for (int k = 1; k <= s; ++k) ++factors[(k - 1) % h.d].dimension;
  return factors;
}

inline bool fixed_set_nonempty(const std::vector<FixedFactor>& factors) {
  for (const auto& f : factors) {
    if (f.rank > f.dimension) return false;
  }
  return true;
}

/// Sum of real dimensions 2 s_i c_i - s_i^2 of the complex Stiefel factors.
inline long long fixed_set_real_dimension(const std::vector<FixedFactor>& factors) {
  if (!fixed_set_nonempty(factors)) throw std::domain_error("fixed set is empty");
  long long dim = 0;
  for (const auto& f : factors) dim += 2LL * f.rank * f.dimension - 1LL * f.rank * f.rank;
  return dim;
}

/// Rows of weight class i (1-based) and their allowed columns, ascending.
inline std::vector<int> class_rows(const SubgroupRep& h, int i) {
  std::vector<int> rows;
  for (int j = 0; j < h.r; ++j) {
    if (h.m[j] == i) rows.push_back(j);
  }
  return rows;
}

inline std::vector<int> class_columns(const SubgroupRep& h, int i, int s) {
  std::vector<int> cols;
  for (int k = 1; k <= s; ++k) {
    if ((k - i) % h.d == 0) cols.push_back(k - 1);
  }
  return cols;
}

/// Scatters component i onto rows with m_j = i and coordinates k = i mod d.
template <typename Real>
Frame<Real> embed_product(const std::vector<Frame<Real>>& components, const SubgroupRep& h, int s,
                          Real tol = default_frame_tolerance<Real>()) {
  const auto factors = fixed_point_factors(h, s);
  if (static_cast<int>(components.size()) != h.d)
    throw std::invalid_argument("embed_product: need one component per weight class");
  ComplexMatrix<Real> rows = ComplexMatrix<Real>::Zero(h.r, s);
  for (int i = 1; i <= h.d; ++i) {
    const auto& comp = components[i - 1];
    if (comp.rank() != factors[i - 1].rank || comp.truncation() != factors[i - 1].dimension)
      throw std::invalid_argument("embed_product: component shape mismatch");
    const auto rs = class_rows(h, i);
    const auto cs = class_columns(h, i, s);
    for (std::size_t a = 0; a < rs.size(); ++a) {
      for (std::size_t b = 0; b < cs.size(); ++b) rows(rs[a], cs[b]) = comp.rows()(a, b);
    }
  }
  return Frame<Real>(std::move(rows), tol);
}

/// Inverse of embed_product; throws if mass outside the pattern exceeds tol.
template <typename Real>
std::vector<Frame<Real>> split_fixed_frame(const Frame<Real>& v, const SubgroupRep& h,
                                           Real tol = Real(1e-12)) {
  if (off_pattern_max(v, h) > tol) throw std::invalid_argument("split_fixed_frame: frame is not fixed");
  const int s = static_cast<int>(v.truncation());
  std::vector<Frame<Real>> out;
  for (int i = 1; i <= h.d; ++i) {
    const auto rs = class_rows(h, i);
    const auto cs = class_columns(h, i, s);
    ComplexMatrix<Real> comp(rs.size(), cs.size());
    for (std::size_t a = 0; a < rs.size(); ++a) {
      for (std::size_t b = 0; b < cs.size(); ++b) comp(a, b) = v.rows()(rs[a], cs[b]);
    }
    out.emplace_back(std::move(comp), std::max(v.tolerance(), Real(2) * tol));
  }
  return out;
}

/// max |act((1, a), v) - v|.
template <typename Real>
Real stabilizer_displacement(const Frame<Real>& v, const ComplexMatrix<Real>& a) {
  const auto g = GroupElement<Real>::make(1, 0, a, v.tolerance());
  return max_abs(ComplexMatrix<Real>(act(g, v).rows() - v.rows()));
}

/// If (1, a) fixes v within tol, then a must be within sqrt(tol) of I.
template <typename Real>
bool trivial_stabilizer_check(const Frame<Real>& v, const ComplexMatrix<Real>& a, Real tol) {
  if (stabilizer_displacement(v, a) > tol) return true;
  return max_abs(ComplexMatrix<Real>(a - ComplexMatrix<Real>::Identity(a.rows(), a.cols()))) <=
         std::sqrt(tol);
}

template <typename Real, typename Rng>
ComplexMatrix<Real> gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<Real> normal(Real(0), Real(1));
  ComplexMatrix<Real> m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const Real re = normal(rng);
      const Real im = normal(rng);
      m(i, j) = {re, im};
    }
  }
  return m;
}

/// Haar-distributed r x r unitary (QR of a Gaussian with phase correction).
template <typename Real, typename Rng>
ComplexMatrix<Real> random_unitary(Eigen::Index r, Rng& rng) {
  const ComplexMatrix<Real> z = gaussian_matrix<Real>(r, r, rng);
  Eigen::HouseholderQR<ComplexMatrix<Real>> qr(z);
  ComplexMatrix<Real> q = qr.householderQ() * ComplexMatrix<Real>::Identity(r, r);
  const ComplexMatrix<Real> upper = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < r; ++j) {
    const std::complex<Real> diag = upper(j, j);
    const Real mag = std::abs(diag);
    if (mag > Real(0)) q.col(j) *= diag / mag;
  }
  return q;
}

/// Seeded Gaussian rows orthonormalized by gram_schmidt.
template <typename Real, typename Rng>
Frame<Real> random_frame(Eigen::Index r, Eigen::Index s, Rng& rng) {
  if (r > s) throw std::invalid_argument("random_frame: r must not exceed s");
  constexpr int kMaxAttempts = 16;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    try {
      return gram_schmidt<Real>(gaussian_matrix<Real>(r, s, rng));
    } catch (const std::domain_error&) {
    }
  }
  throw std::runtime_error("random_frame: degenerate samples");
}

template <typename Real = double>
Frame<Real> random_frame(Eigen::Index r, Eigen::Index s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_frame<Real>(r, s, rng);
}

}  // namespace eqs
