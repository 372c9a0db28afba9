#pragma once

// Exact arithmetic in R(Z_n x T^r), realized as the integer group algebra of
// the character group Z_n x Z^r. The generator character of Z_n is written s
// (sigma, s^n = 1) and the standard torus characters x1, ..., xr.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "eqstiefel/family.hpp"

namespace eqs {

using Integer = mpz_class;

struct Ambient {
  int n = 1;
  int r = 1;

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// s^a * x1^{e_1} * ... * xr^{e_r}; a is kept reduced into 0..n-1.
struct CharacterMonomial {
  int a = 0;
  std::vector<int> e;

  friend bool operator==(const CharacterMonomial&, const CharacterMonomial&) = default;
  friend auto operator<=>(const CharacterMonomial&, const CharacterMonomial&) = default;
};

/// Element of Z[tau]/(tau^d - 1) in the basis 1, tau, ..., tau^{d-1}.
class CyclicElement {
 public:
  explicit CyclicElement(int order);

  int order() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer& operator[](int k) { return coeffs_[k]; }
  const Integer& operator[](int k) const { return coeffs_[k]; }

  bool is_zero() const;
  std::string to_string() const;

  CyclicElement& operator+=(const CyclicElement& other);
  friend CyclicElement operator+(CyclicElement a, const CyclicElement& b) { return a += b; }
  friend CyclicElement operator*(const CyclicElement& a, const CyclicElement& b);
  friend bool operator==(const CyclicElement&, const CyclicElement&) = default;

 private:
  std::vector<Integer> coeffs_;
};

class CharacterPolynomial {
 public:
  using TermMap = std::map<CharacterMonomial, Integer>;

  explicit CharacterPolynomial(Ambient ambient);

  static CharacterPolynomial constant(Ambient ambient, const Integer& c);
  static CharacterPolynomial monomial(Ambient ambient, int a, std::vector<int> e,
                                      const Integer& c = 1);
  static CharacterPolynomial sigma(Ambient ambient);
  /// Torus character x_j, 1-indexed.
  static CharacterPolynomial x(Ambient ambient, int j);

  const Ambient& ambient() const { return ambient_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * monomial, normalizing the sigma exponent and dropping zeros.
  void add_term(CharacterMonomial mono, const Integer& c);

  /// Largest |e_j| over the support; 0 for the zero polynomial.
  int max_abs_exponent() const;

  CharacterPolynomial& operator+=(const CharacterPolynomial& g);
  CharacterPolynomial& operator-=(const CharacterPolynomial& g);
  CharacterPolynomial& operator*=(const Integer& c);

  friend CharacterPolynomial operator+(CharacterPolynomial f, const CharacterPolynomial& g) {
    return f += g;
  }
  friend CharacterPolynomial operator-(CharacterPolynomial f, const CharacterPolynomial& g) {
    return f -= g;
  }
  friend CharacterPolynomial operator-(CharacterPolynomial f) { return f *= Integer(-1); }
  friend CharacterPolynomial operator*(const CharacterPolynomial& f, const CharacterPolynomial& g);
  friend CharacterPolynomial operator*(CharacterPolynomial f, const Integer& c) { return f *= c; }
  friend CharacterPolynomial operator*(const Integer& c, CharacterPolynomial f) { return f *= c; }
  friend bool operator==(const CharacterPolynomial&, const CharacterPolynomial&) = default;

 private:
  void require_same_ambient(const CharacterPolynomial& g) const;

  Ambient ambient_;
  TermMap terms_;
};

CharacterPolynomial pow(const CharacterPolynomial& f, int exponent);

/// Monomial product with the sigma exponent reduced mod n.
CharacterMonomial multiply(const CharacterMonomial& a, const CharacterMonomial& b, int n);

/// Image exponent of a monomial in Z_d under the restriction map.
int restriction_image(const CharacterMonomial& mono, const RestrictionMap& h);

CyclicElement restrict(const CharacterPolynomial& f, const RestrictionMap& h);

bool in_kernel(const CharacterPolynomial& f, const SubgroupRep& h);

struct IntersectionResult {
  bool member = true;
  std::optional<SubgroupRep> certificate;  // first subgroup whose restriction is nonzero
  std::optional<CyclicElement> failing_image;
};

IntersectionResult in_intersection(const CharacterPolynomial& f, const std::vector<SubgroupRep>& hs);

/// Invariance under every permutation of the torus coordinates.
bool is_symmetric(const CharacterPolynomial& f);

/// x_j -> 1 for all j, keeping sigma: an element of Z[Z_n].
CyclicElement augmentation_torus(const CharacterPolynomial& f);

/// Reduces tau-exponents of an element of Z[Z_n] modulo a divisor d of n.
CyclicElement reduce_order(const CyclicElement& u, int d);

/// Membership in J = (intersection of kernels of H_{-1}, ..., H_r) restricted
/// to the symmetric subring; requires n = 2.
bool in_J(const CharacterPolynomial& f);

/// Canonical text form, terms in descending (sigma exponent, x exponents)
/// order, e.g. "2*s^1*x1^-1*x2^3 - 1".
std::string to_string(const CharacterPolynomial& f);

/// Parses sums and products of integers, s, x<j>, powers and parenthesized
/// subexpressions. Negative powers are allowed on monomials only.
CharacterPolynomial parse_polynomial(std::string_view text, Ambient ambient);

}  // namespace eqs
