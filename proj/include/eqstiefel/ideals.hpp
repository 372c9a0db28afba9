#pragma once

// Window-bounded decision procedures for ideals of R(Z_n x T^r): membership
// in powers of finitely generated ideals, containment of ideals, and the
// comparison of single-ideal adic topologies.
//
// Kernel ideals are never materialized as generator lists. Membership in a
// kernel (or an intersection of kernels) is decided by restriction, which is
// exact. Finitely generated ideals are decided by lattice membership over
// multipliers whose torus exponents lie in [-window, window]; a negative
// answer is only valid inside that window and is labeled as such.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eqstiefel/character_ring.hpp"

namespace eqs {

/// Intersection of the kernels I_H over the listed subgroups.
struct KernelIdeal {
  std::vector<SubgroupRep> subgroups;
};

struct GeneratedIdeal {
  std::vector<CharacterPolynomial> generators;
};

using IdealSpec = std::variant<KernelIdeal, GeneratedIdeal>;

Ambient ambient_of(const IdealSpec& ideal);

/// One summand multiplier * (product of the generators named by factors).
struct WitnessTerm {
  std::vector<int> factors;  // nondecreasing generator indices, length m
  CharacterPolynomial multiplier;
};

struct PowerMembership {
  enum class Verdict { Yes, NoWithinWindow };
  Verdict verdict = Verdict::NoWithinWindow;
  std::vector<WitnessTerm> witness;
  std::size_t columns = 0;  // size of the integer system that was solved
};

/// Decides f in (g_1, ..., g_k)^m with multiplier monomials
/// s^a x^e, |e_j| <= window. Throws if f's support exceeds the window.
PowerMembership power_ideal_member(const CharacterPolynomial& f,
                                   const std::vector<CharacterPolynomial>& generators,
                                   int m, int window);

/// Re-multiplies a witness; equals f for every Yes answer.
CharacterPolynomial expand_witness(const std::vector<WitnessTerm>& witness,
                                   const std::vector<CharacterPolynomial>& generators,
                                   Ambient ambient);

/// Monomials s^a x^e with a in 0..n-1 and sum |e_j| <= degree.
std::vector<CharacterMonomial> monomial_box(Ambient ambient, int degree);

/// Elements spanning A (as an ideal for generated A, and as an abelian group
/// inside the degree box for kernel ideals). A single kernel uses the
/// differences mu - nu of monomials with equal restriction image; an
/// intersection uses an integer kernel basis of the stacked restrictions.
std::vector<CharacterPolynomial> spanning_set(const IdealSpec& ideal, int degree);

struct IdealMembership {
  bool member = false;
  std::optional<SubgroupRep> failing_subgroup;
  std::optional<CyclicElement> failing_image;
  std::optional<PowerMembership> lattice;  // set for generated ideals
};

/// Membership of one element: restriction for kernel ideals, m = 1 lattice
/// membership for generated ideals.
IdealMembership ideal_member(const CharacterPolynomial& f, const IdealSpec& ideal, int window);

struct ContainmentReport {
  enum class Verdict { ContainedWithinBounds, NotContained, NotContainedWithinWindow };
  Verdict verdict = Verdict::ContainedWithinBounds;
  std::string direction = "A<=B";
  int power = 1;
  std::size_t elements_tested = 0;
  int degree = 0;
  int window = 0;
  std::optional<CharacterPolynomial> counterexample;
  std::optional<IdealMembership> failure;
};

std::string to_string(ContainmentReport::Verdict v);

/// Tests A^power in B over the products of `power` spanning elements of A.
/// Products of spanning elements span A^power as an ideal whenever the
/// spanning set generates A; within the degree box this is the bounded sweep.
ContainmentReport containment_report(const IdealSpec& a, const IdealSpec& b, int degree,
                                     int window, int power = 1);

struct TopologyReport {
  struct Direction {
    std::string direction;
    std::optional<int> least_power;  // none within maxpow
    ContainmentReport last;          // the success report, or the maxpow failure
  };
  Direction a_in_b;
  Direction b_in_a;
};

TopologyReport topology_equivalence_report(const IdealSpec& a, const IdealSpec& b, int maxpow,
                                           int degree, int window);

}  // namespace eqs
