#include "eqstiefel/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "eqstiefel/lattice.hpp"

namespace eqs {

namespace {

// Calls visit(indices) for every nondecreasing index vector of length m over
// 0..count-1, in lexicographic order; stops early when visit returns false.
void for_each_multiset(std::size_t count, int m,
                       const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (count == 0 || m < 1) return;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    if (!visit(idx)) return;
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == count - 1) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int q = pos + 1; q < m; ++q) idx[q] = idx[pos];
  }
}

std::vector<std::vector<int>> exponent_box(int r, int radius) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(r, -radius);
  while (true) {
    out.push_back(e);
    int j = r - 1;
    while (j >= 0 && e[j] == radius) {
      e[j] = -radius;
      --j;
    }
    if (j < 0) return out;
    ++e[j];
  }
}

const std::vector<SubgroupRep>& kernel_subgroups(const KernelIdeal& k) {
  if (k.subgroups.empty()) throw std::invalid_argument("kernel ideal: empty subgroup list");
  return k.subgroups;
}

}  // namespace

Ambient ambient_of(const IdealSpec& ideal) {
  if (const auto* k = std::get_if<KernelIdeal>(&ideal)) {
    const auto& h = kernel_subgroups(*k).front();
    return Ambient{h.n, h.r};
  }
  const auto& g = std::get<GeneratedIdeal>(ideal);
  if (g.generators.empty()) throw std::invalid_argument("generated ideal: no generators");
  return g.generators.front().ambient();
}

PowerMembership power_ideal_member(const CharacterPolynomial& f,
                                   const std::vector<CharacterPolynomial>& generators, int m,
                                   int window) {
  if (m < 1) throw std::invalid_argument("power_ideal_member: m must be positive");
  if (generators.empty()) throw std::invalid_argument("power_ideal_member: no generators");
  if (window < 0 || f.max_abs_exponent() > window)
    throw std::invalid_argument("power_ideal_member: window too small to contain the support");
  const Ambient amb = f.ambient();
  for (const auto& g : generators) {
    if (!(g.ambient() == amb)) throw std::invalid_argument("power_ideal_member: ambient mismatch");
  }

  PowerMembership result;
  if (f.is_zero()) {
    result.verdict = PowerMembership::Verdict::Yes;
    return result;
  }

  std::vector<std::vector<int>> factor_lists;
  std::vector<CharacterPolynomial> products;
  for_each_multiset(generators.size(), m, [&](const std::vector<std::size_t>& idx) {
    CharacterPolynomial p = CharacterPolynomial::constant(amb, 1);
    std::vector<int> factors;
    for (auto i : idx) {
      p = p * generators[i];
      factors.push_back(static_cast<int>(i));
    }
    if (!p.is_zero()) {
      factor_lists.push_back(std::move(factors));
      products.push_back(std::move(p));
    }
    return true;
  });
  if (products.empty()) return result;

  std::vector<CharacterMonomial> multipliers;
  for (int a = 0; a < amb.n; ++a) {
    for (auto& e : exponent_box(amb.r, window)) multipliers.push_back(CharacterMonomial{a, e});
  }

  // Rows are ordered by torus exponent first. Multiplying by x^e preserves
  // that order, so shifted copies of one product keep distinct leading rows
  // and most insertions need no reduction.
  struct TorusFirst {
    bool operator()(const CharacterMonomial& x, const CharacterMonomial& y) const {
      return std::tie(x.e, x.a) < std::tie(y.e, y.a);
    }
  };
  std::set<CharacterMonomial, TorusFirst> support;
  for (const auto& [mono, c] : f.terms()) support.insert(mono);
  for (const auto& p : products) {
    for (const auto& mu : multipliers) {
      for (const auto& [mono, c] : p.terms()) support.insert(multiply(mu, mono, amb.n));
    }
  }
  std::map<CharacterMonomial, std::size_t, TorusFirst> row_of;
  for (const auto& mono : support) row_of.emplace(mono, row_of.size());

  auto to_sparse = [&](const CharacterPolynomial& poly, const CharacterMonomial* shift) {
    lattice::SparseVector v;
    v.reserve(poly.size());
    for (const auto& [mono, c] : poly.terms()) {
      const auto& key = shift ? multiply(*shift, mono, amb.n) : mono;
      v.emplace_back(row_of.at(key), c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };

  lattice::EchelonLattice lat(true);
  const std::size_t per_product = multipliers.size();
  for (std::size_t pi = 0; pi < products.size(); ++pi) {
    for (std::size_t mi = 0; mi < per_product; ++mi) {
      lat.insert(to_sparse(products[pi], &multipliers[mi]), pi * per_product + mi);
    }
  }
  result.columns = products.size() * per_product;

  auto combo = lat.solve(to_sparse(f, nullptr));
  if (!combo) return result;

  result.verdict = PowerMembership::Verdict::Yes;
  std::map<std::size_t, CharacterPolynomial> multiplier_of;
  for (const auto& [tag, c] : *combo) {
    const std::size_t pi = tag / per_product;
    const auto& mu = multipliers[tag % per_product];
    auto it = multiplier_of.try_emplace(pi, CharacterPolynomial(amb)).first;
    it->second.add_term(mu, c);
  }
  for (auto& [pi, mult] : multiplier_of) {
    if (!mult.is_zero()) result.witness.push_back(WitnessTerm{factor_lists[pi], std::move(mult)});
  }
  return result;
}

CharacterPolynomial expand_witness(const std::vector<WitnessTerm>& witness,
                                   const std::vector<CharacterPolynomial>& generators,
                                   Ambient ambient) {
  CharacterPolynomial sum(ambient);
  for (const auto& term : witness) {
    CharacterPolynomial p = term.multiplier;
    for (int i : term.factors) p = p * generators.at(i);
    sum += p;
  }
  return sum;
}

std::vector<CharacterMonomial> monomial_box(Ambient ambient, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial_box: negative degree");
  std::vector<CharacterMonomial> out;
  for (int a = 0; a < ambient.n; ++a) {
    for (auto& e : exponent_box(ambient.r, degree)) {
      int total = 0;
      for (int v : e) total += std::abs(v);
      if (total <= degree) out.push_back(CharacterMonomial{a, e});
    }
  }
  return out;
}

std::vector<CharacterPolynomial> spanning_set(const IdealSpec& ideal, int degree) {
  std::vector<CharacterPolynomial> out;
  if (const auto* gen = std::get_if<GeneratedIdeal>(&ideal)) {
    out = gen->generators;
  } else {
    const auto& hs = kernel_subgroups(std::get<KernelIdeal>(ideal));
    const Ambient amb{hs.front().n, hs.front().r};
    const auto box = monomial_box(amb, degree);
    std::vector<RestrictionMap> maps;
    for (const auto& h : hs) maps.push_back(restriction_hom(h));

    if (maps.size() == 1) {
      std::map<int, const CharacterMonomial*> representative;
      for (const auto& mono : box) {
        auto [it, fresh] = representative.try_emplace(restriction_image(mono, maps[0]), &mono);
        if (fresh) continue;
        CharacterPolynomial diff(amb);
        diff.add_term(mono, 1);
        diff.add_term(*it->second, -1);
        out.push_back(std::move(diff));
      }
    } else {
      std::vector<lattice::SparseVector> columns;
      for (const auto& mono : box) {
        lattice::SparseVector col;
        std::size_t offset = 0;
        for (const auto& map : maps) {
          col.emplace_back(offset + restriction_image(mono, map), lattice::Integer(1));
          offset += map.target_order;
        }
        columns.push_back(std::move(col));
      }
      for (const auto& rel : lattice::integer_kernel(columns)) {
        CharacterPolynomial f(amb);
        for (const auto& [i, c] : rel) f.add_term(box[i], c);
        if (!f.is_zero()) out.push_back(std::move(f));
      }
    }
  }
  if (out.empty()) throw std::invalid_argument("spanning set: bounds too small, no spanning element found");
  return out;
}

IdealMembership ideal_member(const CharacterPolynomial& f, const IdealSpec& ideal, int window) {
  IdealMembership out;
  if (const auto* k = std::get_if<KernelIdeal>(&ideal)) {
    auto res = in_intersection(f, kernel_subgroups(*k));
    out.member = res.member;
    out.failing_subgroup = std::move(res.certificate);
    out.failing_image = std::move(res.failing_image);
  } else {
    auto res = power_ideal_member(f, std::get<GeneratedIdeal>(ideal).generators, 1, window);
    out.member = res.verdict == PowerMembership::Verdict::Yes;
    out.lattice = std::move(res);
  }
  return out;
}

std::string to_string(ContainmentReport::Verdict v) {
  switch (v) {
    case ContainmentReport::Verdict::ContainedWithinBounds: return "CONTAINED";
    case ContainmentReport::Verdict::NotContained: return "NOT-CONTAINED";
    case ContainmentReport::Verdict::NotContainedWithinWindow: return "NOT-CONTAINED-WITHIN-WINDOW";
  }
  return "?";
}

ContainmentReport containment_report(const IdealSpec& a, const IdealSpec& b, int degree,
                                     int window, int power) {
  if (power < 1) throw std::invalid_argument("containment_report: power must be positive");
  if (!(ambient_of(a) == ambient_of(b)))
    throw std::invalid_argument("containment_report: ambient mismatch");
  const Ambient amb = ambient_of(a);
  const auto span = spanning_set(a, degree);

  ContainmentReport report;
  report.power = power;
  report.degree = degree;
  report.window = window;
  report.direction = power == 1 ? "A<=B" : "A^" + std::to_string(power) + "<=B";

  auto product_of = [&](const std::vector<std::size_t>& idx) {
    CharacterPolynomial p = CharacterPolynomial::constant(amb, 1);
    for (auto i : idx) p = p * span[i];
    return p;
  };
  auto fail_with = [&](CharacterPolynomial element, IdealMembership why) {
    report.verdict = why.lattice ? ContainmentReport::Verdict::NotContainedWithinWindow
                                 : ContainmentReport::Verdict::NotContained;
    report.counterexample = std::move(element);
    report.failure = std::move(why);
  };

  if (const auto* kb = std::get_if<KernelIdeal>(&b)) {
    // Restriction is a ring map: multiply images instead of polynomials.
    const auto& hs = kernel_subgroups(*kb);
    std::vector<std::vector<CyclicElement>> images(span.size());
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (const auto& h : hs) images[i].push_back(restrict(span[i], restriction_hom(h)));
    }
    for_each_multiset(span.size(), power, [&](const std::vector<std::size_t>& idx) {
      ++report.elements_tested;
      for (std::size_t k = 0; k < hs.size(); ++k) {
        CyclicElement image = images[idx[0]][k];
        for (std::size_t q = 1; q < idx.size(); ++q) image = image * images[idx[q]][k];
        if (!image.is_zero()) {
          IdealMembership why;
          why.failing_subgroup = hs[k];
          why.failing_image = std::move(image);
          fail_with(product_of(idx), std::move(why));
          return false;
        }
      }
      return true;
    });
  } else {
    for_each_multiset(span.size(), power, [&](const std::vector<std::size_t>& idx) {
      ++report.elements_tested;
      CharacterPolynomial element = product_of(idx);
      IdealMembership why = ideal_member(element, b, window);
      if (why.member) return true;
      fail_with(std::move(element), std::move(why));
      return false;
    });
  }
  return report;
}

TopologyReport topology_equivalence_report(const IdealSpec& a, const IdealSpec& b, int maxpow,
                                           int degree, int window) {
  if (maxpow < 1) throw std::invalid_argument("topology_equivalence_report: maxpow must be positive");
  auto direction = [&](const IdealSpec& x, const IdealSpec& y, const std::string& label) {
    TopologyReport::Direction dir;
    dir.direction = label;
    for (int m = 1; m <= maxpow; ++m) {
      dir.last = containment_report(x, y, degree, window, m);
      if (dir.last.verdict == ContainmentReport::Verdict::ContainedWithinBounds) {
        dir.least_power = m;
        break;
      }
    }
    return dir;
  };
  TopologyReport report;
  report.a_in_b = direction(a, b, "A^m<=B");
  report.b_in_a = direction(b, a, "B^m<=A");
  return report;
}

}  // namespace eqs
