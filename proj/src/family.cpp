#include "eqstiefel/family.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace eqs {

SubgroupRep SubgroupRep::make(int n, int d, std::vector<int> m) {
  if (n < 1 || d < 1) throw std::invalid_argument("subgroup: n and d must be positive");
  if (n % d != 0) throw std::invalid_argument("subgroup: d must divide n");
  if (m.empty()) throw std::invalid_argument("subgroup: weight vector must be nonempty");
  for (int w : m) {
    if (w < 1 || w > d) throw std::invalid_argument("subgroup: weights must lie in 1..d");
  }
  SubgroupRep h;
  h.n = n;
  h.d = d;
  h.r = static_cast<int>(m.size());
  h.m = std::move(m);
  return h;
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> divisors(int n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<int> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

SubgroupRep from_composition(int n, int d, const Composition& s) {
  if (static_cast<int>(s.parts.size()) != d)
    throw std::invalid_argument("composition must have exactly d parts");
  std::vector<int> m;
  for (int i = 0; i < d; ++i) {
    if (s.parts[i] < 0) throw std::invalid_argument("composition parts must be nonnegative");
    m.insert(m.end(), s.parts[i], i + 1);
  }
  return SubgroupRep::make(n, d, std::move(m));
}

Composition composition_of(const SubgroupRep& h) {
  Composition s{std::vector<int>(h.d, 0)};
  for (int w : h.m) ++s.parts[w - 1];
  return s;
}

namespace {

// Compositions of `remaining` into `slots` nonnegative parts, lexicographic.
void compositions(int remaining, int slots, std::vector<int>& prefix,
                  std::vector<Composition>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.push_back(Composition{prefix});
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= remaining; ++first) {
    prefix.push_back(first);
    compositions(remaining - first, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<SubgroupRep> enumerate_family(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("enumerate_family: n, r must be positive");
  std::vector<SubgroupRep> family;
  for (int d : divisors(n)) {
    std::vector<Composition> parts;
    std::vector<int> prefix;
    compositions(r, d, prefix, parts);
    for (const auto& s : parts) family.push_back(from_composition(n, d, s));
  }
  return family;
}

SubgroupRep subgroup_Hk(int k, int r) {
  if (r < 1) throw std::invalid_argument("subgroup_Hk: r must be positive");
  if (k < -1 || k > r) throw std::invalid_argument("subgroup_Hk: k must lie in -1..r");
  if (k == -1) return SubgroupRep::make(2, 1, std::vector<int>(r, 1));
  std::vector<int> m(r, 2);
  for (int j = 0; j < k; ++j) m[j] = 1;
  return SubgroupRep::make(2, 2, std::move(m));
}

SubgroupRep subgroup_K(int d, int j, int n, int r) {
  if (d < 1 || n < 1 || n % d != 0) throw std::invalid_argument("subgroup_K: d must divide n");
  if (j < 1 || j > d) throw std::invalid_argument("subgroup_K: j must lie in 1..d");
  if (r < 1) throw std::invalid_argument("subgroup_K: r must be positive");
  std::vector<int> m(r, d);
  m[0] = j;
  return SubgroupRep::make(n, d, std::move(m));
}

RestrictionMap restriction_hom(const SubgroupRep& h) {
  RestrictionMap map;
  map.n = h.n;
  map.target_order = h.d;
  map.sigma_image = 1 % h.d;
  map.x_images.reserve(h.m.size());
  for (int w : h.m) map.x_images.push_back(w % h.d);
  return map;
}

std::string to_string(const SubgroupRep& h) {
  std::ostringstream os;
  os << "(n=" << h.n << ", d=" << h.d << ", m=(";
  for (std::size_t j = 0; j < h.m.size(); ++j) os << (j ? "," : "") << h.m[j];
  os << "))";
  return os.str();
}

}  // namespace eqs
