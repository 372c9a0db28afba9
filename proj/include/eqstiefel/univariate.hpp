#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace eqs {

enum class Parity { Even, Odd };

std::string to_string(Parity p);
Parity parse_parity(const std::string& text);

/// Exact polynomial in t with integer coefficients, ascending powers, no
/// trailing zeros.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<mpz_class> coefficients);
  static UnivariatePolynomial constant(const mpz_class& c);
  /// 1 - t
  static UnivariatePolynomial one_minus_t();
  static UnivariatePolynomial t();

  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::string to_string() const;

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  /// Exact quotient; throws std::domain_error if b does not divide a in Z[t].
  friend UnivariatePolynomial exact_divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

  double evaluate(double t) const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

using PolynomialMatrix = std::vector<std::vector<UnivariatePolynomial>>;

/// The displayed (size x size) pattern: leading entry 1, then 1 - t on the
/// diagonal, and t at (2l - 1, l) for l >= 2 (1-indexed). It is the first
/// projection of the odd interleaving map on C^size.
PolynomialMatrix displayed_band_pattern(int size);

/// n x n matrix of the linear map v -> (first n coordinates of g_t(v)) on C^n.
/// Built from the displayed (n+1)-pattern: even parity deletes the leading
/// row and column, odd parity the trailing one.
PolynomialMatrix band_matrix(int n, Parity parity);

/// Fraction-free (Bareiss) elimination over Z[t].
UnivariatePolynomial det_exact(const PolynomialMatrix& m);

}  // namespace eqs
