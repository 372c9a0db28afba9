#include "eqstiefel/character_ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace eqs {

namespace {

int mod(long long a, int n) {
  long long rem = a % n;
  return static_cast<int>(rem < 0 ? rem + n : rem);
}

}  // namespace

// ---------------------------------------------------------------------------
// CyclicElement

CyclicElement::CyclicElement(int order) {
  if (order < 1) throw std::invalid_argument("cyclic element: order must be positive");
  coeffs_.assign(order, Integer(0));
}

bool CyclicElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

std::string CyclicElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k].get_str();
  os << "]";
  return os.str();
}

CyclicElement& CyclicElement::operator+=(const CyclicElement& other) {
  if (other.order() != order()) throw std::invalid_argument("cyclic element: order mismatch");
  for (int k = 0; k < order(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CyclicElement operator*(const CyclicElement& a, const CyclicElement& b) {
  if (a.order() != b.order()) throw std::invalid_argument("cyclic element: order mismatch");
  const int d = a.order();
  CyclicElement out(d);
  for (int i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < d; ++j) out.coeffs_[(i + j) % d] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

// ---------------------------------------------------------------------------
// CharacterPolynomial

CharacterPolynomial::CharacterPolynomial(Ambient ambient) : ambient_(ambient) {
  if (ambient.n < 1 || ambient.r < 1)
    throw std::invalid_argument("character polynomial: n and r must be positive");
}

CharacterPolynomial CharacterPolynomial::constant(Ambient ambient, const Integer& c) {
  return monomial(ambient, 0, std::vector<int>(ambient.r, 0), c);
}

CharacterPolynomial CharacterPolynomial::monomial(Ambient ambient, int a, std::vector<int> e,
                                                  const Integer& c) {
  CharacterPolynomial f(ambient);
  f.add_term(CharacterMonomial{a, std::move(e)}, c);
  return f;
}

CharacterPolynomial CharacterPolynomial::sigma(Ambient ambient) {
  return monomial(ambient, 1, std::vector<int>(ambient.r, 0));
}

CharacterPolynomial CharacterPolynomial::x(Ambient ambient, int j) {
  if (j < 1 || j > ambient.r) throw std::invalid_argument("torus character index out of range");
  std::vector<int> e(ambient.r, 0);
  e[j - 1] = 1;
  return monomial(ambient, 0, std::move(e));
}

void CharacterPolynomial::add_term(CharacterMonomial mono, const Integer& c) {
  if (static_cast<int>(mono.e.size()) != ambient_.r)
    throw std::invalid_argument("monomial rank does not match ambient");
  if (c == 0) return;
  mono.a = mod(mono.a, ambient_.n);
  auto [it, inserted] = terms_.try_emplace(std::move(mono), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int CharacterPolynomial::max_abs_exponent() const {
  int spread = 0;
  for (const auto& [mono, c] : terms_) {
    for (int v : mono.e) spread = std::max(spread, std::abs(v));
  }
  return spread;
}

void CharacterPolynomial::require_same_ambient(const CharacterPolynomial& g) const {
  if (!(ambient_ == g.ambient_)) throw std::invalid_argument("character polynomial: ambient mismatch");
}

CharacterPolynomial& CharacterPolynomial::operator+=(const CharacterPolynomial& g) {
  require_same_ambient(g);
  for (const auto& [mono, c] : g.terms_) add_term(mono, c);
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator-=(const CharacterPolynomial& g) {
  require_same_ambient(g);
  for (const auto& [mono, c] : g.terms_) add_term(mono, -c);
  return *this;
}

CharacterPolynomial& CharacterPolynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

CharacterMonomial multiply(const CharacterMonomial& a, const CharacterMonomial& b, int n) {
  CharacterMonomial out{mod(static_cast<long long>(a.a) + b.a, n), a.e};
  for (std::size_t j = 0; j < out.e.size(); ++j) out.e[j] += b.e[j];
  return out;
}

CharacterPolynomial operator*(const CharacterPolynomial& f, const CharacterPolynomial& g) {
  f.require_same_ambient(g);
  CharacterPolynomial out(f.ambient_);
  for (const auto& [ma, ca] : f.terms_) {
    for (const auto& [mb, cb] : g.terms_) out.add_term(multiply(ma, mb, f.ambient_.n), ca * cb);
  }
  return out;
}

CharacterPolynomial pow(const CharacterPolynomial& f, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow: negative exponent");
  CharacterPolynomial out = CharacterPolynomial::constant(f.ambient(), 1);
  for (int i = 0; i < exponent; ++i) out = out * f;
  return out;
}

// ---------------------------------------------------------------------------
// Restriction and kernels

int restriction_image(const CharacterMonomial& mono, const RestrictionMap& h) {
  long long k = static_cast<long long>(h.sigma_image) * mono.a;
  for (std::size_t j = 0; j < mono.e.size(); ++j)
    k += static_cast<long long>(h.x_images[j]) * mono.e[j];
  return mod(k, h.target_order);
}

CyclicElement restrict(const CharacterPolynomial& f, const RestrictionMap& h) {
  if (f.ambient().n != h.n || f.ambient().r != h.rank())
    throw std::invalid_argument("restrict: map built for a different ambient");
  CyclicElement out(h.target_order);
  for (const auto& [mono, c] : f.terms()) out[restriction_image(mono, h)] += c;
  return out;
}

bool in_kernel(const CharacterPolynomial& f, const SubgroupRep& h) {
  return restrict(f, restriction_hom(h)).is_zero();
}

IntersectionResult in_intersection(const CharacterPolynomial& f,
                                   const std::vector<SubgroupRep>& hs) {
  if (hs.empty()) throw std::invalid_argument("in_intersection: empty subgroup list");
  IntersectionResult result;
  for (const auto& h : hs) {
    CyclicElement image = restrict(f, restriction_hom(h));
    if (!image.is_zero()) {
      result.member = false;
      result.certificate = h;
      result.failing_image = std::move(image);
      return result;
    }
  }
  return result;
}

bool is_symmetric(const CharacterPolynomial& f) {
  // Adjacent transpositions generate the symmetric group.
  const int r = f.ambient().r;
  for (const auto& [mono, c] : f.terms()) {
    for (int j = 0; j + 1 < r; ++j) {
      if (mono.e[j] == mono.e[j + 1]) continue;
      CharacterMonomial swapped = mono;
      std::swap(swapped.e[j], swapped.e[j + 1]);
      auto it = f.terms().find(swapped);
      if (it == f.terms().end() || it->second != c) return false;
    }
  }
  return true;
}

CyclicElement augmentation_torus(const CharacterPolynomial& f) {
  CyclicElement out(f.ambient().n);
  for (const auto& [mono, c] : f.terms()) out[mono.a] += c;
  return out;
}

CyclicElement reduce_order(const CyclicElement& u, int d) {
  if (d < 1 || u.order() % d != 0) throw std::invalid_argument("reduce_order: d must divide the order");
  CyclicElement out(d);
  for (int k = 0; k < u.order(); ++k) out[k % d] += u[k];
  return out;
}

bool in_J(const CharacterPolynomial& f) {
  if (f.ambient().n != 2) throw std::invalid_argument("in_J: requires n = 2");
  if (!is_symmetric(f)) return false;
  std::vector<SubgroupRep> hs;
  for (int k = -1; k <= f.ambient().r; ++k) hs.push_back(subgroup_Hk(k, f.ambient().r));
  return in_intersection(f, hs).member;
}

}  // namespace eqs
