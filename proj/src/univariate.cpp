#include "eqstiefel/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqs {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(const std::string& text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UnivariatePolynomial UnivariatePolynomial::constant(const mpz_class& c) {
  return UnivariatePolynomial({c});
}

UnivariatePolynomial UnivariatePolynomial::one_minus_t() {
  return UnivariatePolynomial({mpz_class(1), mpz_class(-1)});
}

UnivariatePolynomial UnivariatePolynomial::t() {
  return UnivariatePolynomial({mpz_class(0), mpz_class(1)});
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string UnivariatePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpz_class& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    mpz_class mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out;
}

UnivariatePolynomial operator+(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a) {
  std::vector<mpz_class> c = a.coeffs_;
  for (auto& v : c) v = -v;
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial operator-(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  return a + (-b);
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial exact_divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (b.is_zero()) throw std::domain_error("exact_divide: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("exact_divide: not divisible");
  std::vector<mpz_class> rem = a.coeffs_;
  std::vector<mpz_class> q(a.coeffs_.size() - b.coeffs_.size() + 1, mpz_class(0));
  const mpz_class& lead = b.coeffs_.back();
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    mpz_class& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("exact_divide: not divisible over Z");
    q[k] = top / lead;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[k + j] -= q[k] * b.coeffs_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c != 0; }))
    throw std::domain_error("exact_divide: nonzero remainder");
  return UnivariatePolynomial(std::move(q));
}

double UnivariatePolynomial::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

PolynomialMatrix displayed_band_pattern(int size) {
  if (size < 1) throw std::invalid_argument("band pattern: size must be positive");
  PolynomialMatrix m(size, std::vector<UnivariatePolynomial>(size));
  m[0][0] = UnivariatePolynomial::constant(1);
  for (int k = 1; k < size; ++k) m[k][k] = UnivariatePolynomial::one_minus_t();
  // 1-indexed row 2l - 1 picks up t * v_l.
  for (int l = 2; 2 * l - 1 <= size; ++l) m[2 * l - 2][l - 1] = UnivariatePolynomial::t();
  return m;
}

PolynomialMatrix band_matrix(int n, Parity parity) {
  if (n < 1) throw std::invalid_argument("band_matrix: n must be positive");
  const PolynomialMatrix full = displayed_band_pattern(n + 1);
  const int skip = parity == Parity::Even ? 0 : n;
  PolynomialMatrix out;
  for (int i = 0; i <= n; ++i) {
    if (i == skip) continue;
    std::vector<UnivariatePolynomial> row;
    for (int j = 0; j <= n; ++j) {
      if (j != skip) row.push_back(full[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

UnivariatePolynomial det_exact(const PolynomialMatrix& input) {
  const std::size_t n = input.size();
  for (const auto& row : input) {
    if (row.size() != n) throw std::invalid_argument("det_exact: matrix must be square");
  }
  if (n == 0) return UnivariatePolynomial::constant(1);
  PolynomialMatrix m = input;
  UnivariatePolynomial previous = UnivariatePolynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
      }
      m[i][k] = UnivariatePolynomial();
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace eqs
