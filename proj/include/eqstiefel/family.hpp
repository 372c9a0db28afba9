#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eqstiefel/roots.hpp"

namespace eqs {

/// Cyclic subgroup of Z_n x U(r) generated by the single pair
/// (lambda, rho(lambda)), where lambda is the element of order d in Z_n and
/// rho(lambda) = diag(lambda^{m_1}, ..., lambda^{m_r}).
///
/// Every weight m_j lies in {1, ..., d}; weight d stands for lambda^d = 1.
/// The subgroup meets U(r) trivially for every such encoding, since its
/// generator projects onto a generator of the order-d subgroup of Z_n.
struct SubgroupRep {
  int n = 1;
  int d = 1;
  int r = 1;
  std::vector<int> m{1};

  /// Validated constructor; throws std::invalid_argument on d not dividing n
  /// or a weight outside {1, ..., d}. The weight order is kept as given.
  static SubgroupRep make(int n, int d, std::vector<int> m);

  /// Exponent p with gamma^p = lambda, gamma = exp(2 pi i / n).
  int generator_power() const { return n / d; }

  friend bool operator==(const SubgroupRep&, const SubgroupRep&) = default;
};

/// Multiplicities (s_1, ..., s_d) of the weights 1..d.
struct Composition {
  std::vector<int> parts;

  int total() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Image of the standard characters under restriction to a cyclic subgroup
/// of order target_order: sigma -> tau^{sigma_image}, x_j -> tau^{x_images[j]}.
struct RestrictionMap {
  int n = 1;
  int target_order = 1;
  int sigma_image = 0;
  std::vector<int> x_images;

  int rank() const { return static_cast<int>(x_images.size()); }
};

std::vector<int> divisors(int n);

/// Weight vector listing s_1 ones, s_2 twos, ..., s_d copies of d.
SubgroupRep from_composition(int n, int d, const Composition& s);

/// Inverse of from_composition: counts of each weight in m.
Composition composition_of(const SubgroupRep& h);

/// All H_{d,s} with d | n and s a composition of r into d nonnegative parts.
/// Order: d ascending, then compositions lexicographic.
std::vector<SubgroupRep> enumerate_family(int n, int r);

/// The Z_2 x T^r subgroups H_k, k = -1..r. H_{-1} is the trivial group.
SubgroupRep subgroup_Hk(int k, int r);

/// K_{d,j} = <(lambda, diag(lambda^j, 1, ..., 1))> inside Z_n x U(r).
SubgroupRep subgroup_K(int d, int j, int n, int r);

RestrictionMap restriction_hom(const SubgroupRep& h);

std::string to_string(const SubgroupRep& h);

template <typename Real = double>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> rho_matrix(
    const SubgroupRep& h) {
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> rho =
      Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>::Zero(
          h.r, h.r);
  for (int j = 0; j < h.r; ++j) rho(j, j) = unit_root<Real>(h.m[j], h.d);
  return rho;
}

}  // namespace eqs
