// Acceptance suite. Runs each numbered criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eqstiefel/bundle.hpp"
#include "eqstiefel/character_ring.hpp"
#include "eqstiefel/family.hpp"
#include "eqstiefel/homotopy.hpp"
#include "eqstiefel/ideals.hpp"
#include "eqstiefel/stiefel.hpp"
#include "eqstiefel/univariate.hpp"
#include "oracles.hpp"

using namespace eqs;
using Mat = ComplexMatrix<double>;
using Vec = ComplexVector<double>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int pick(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ---------------------------------------------------------------- 1
Outcome family_enumeration() {
  const auto start = Clock::now();
  Outcome out;
  const std::vector<std::pair<int, int>> cases{{1, 3}, {2, 1}, {2, 2}, {4, 2}, {6, 3}};
  for (auto [n, r] : cases) {
    long long brute = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) brute += oracle::composition_count_brute(r, d);
    }
    const auto family = enumerate_family(n, r);
    if (static_cast<long long>(family.size()) != brute || brute != oracle::family_size_formula(n, r)) {
      out.pass = false;
      out.detail += " |F(" + std::to_string(n) + "," + std::to_string(r) + ")|=" + std::to_string(family.size()) +
                    " vs " + std::to_string(brute);
    }
  }
  const auto f22 = enumerate_family(2, 2);
  std::vector<bool> hit(f22.size(), false);
  for (int k = -1; k <= 2; ++k) {
    const auto it = std::find(f22.begin(), f22.end(), subgroup_Hk(k, 2));
    if (it == f22.end() || hit[it - f22.begin()]) {
      out.pass = false;
      out.detail += " H" + std::to_string(k) + " unmatched";
    } else {
      hit[it - f22.begin()] = true;
    }
  }
  if (f22.size() != 4 || std::count(hit.begin(), hit.end(), true) != 4) out.pass = false;
  const double t = seconds_since(start);
  if (t >= 1.0) out.pass = false;
  out.detail = "(2,2) -> " + std::to_string(f22.size()) + " subgroups, " + fmt(t) + " s" + out.detail;
  return out;
}

// ---------------------------------------------------------------- 2
Outcome action_suite() {
  std::mt19937_64 rng(2001);
  double worst = 0, composed = 0;
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = pick(rng, 1, 8), r = pick(rng, 1, 4), s = pick(rng, r, 16);
    const auto v = random_frame<double>(r, s, rng);
    const auto g = GroupElement<double>::make(n, pick(rng, 0, n - 1), random_unitary<double>(r, rng));
    const auto h = GroupElement<double>::make(n, pick(rng, 0, n - 1), random_unitary<double>(r, rng));
    // Entrywise w_j^k = gamma^{pk} sum_i conj(a_ji) v_i^k as the reference.
    Mat ref(r, s);
    for (int j = 0; j < r; ++j) {
      for (int c = 0; c < s; ++c) {
        std::complex<double> sum = 0;
        for (int i = 0; i < r; ++i) sum += std::conj(g.a(j, i)) * v.rows()(i, c);
        ref(j, c) = std::polar(1.0, 2 * std::numbers::pi * g.p * (c + 1) / n) * sum;
      }
    }
    const double e = std::max({max_abs(Mat(act(g * h, v).rows() - act(g, act(h, v)).rows())),
                               max_abs(Mat(act(GroupElement<double>::identity(n, r), v).rows() - v.rows())),
                               act(g, v).orthonormality_residual(), max_abs(Mat(act(g, v).rows() - ref))});
    Frame<double> chain(v.rows(), 1e-6);
    for (int step = 0; step < 100; ++step) chain = act(g, chain);
    const double c = chain.orthonormality_residual();
    if (e > 1e-10 || c > 1e-9) ++failures;
    worst = std::max(worst, e);
    composed = std::max(composed, c);
  }
  return {failures == 0, "1000 trials, max residual " + fmt(worst) + ", 100-fold orthonormality " + fmt(composed) +
                             ", failures " + std::to_string(failures)};
}

// ---------------------------------------------------------------- 3
// Real dimension of {X : X v^+ + v X^+ = 0, conj(rho) X D = X}.
int fixed_tangent_dimension(const Frame<double>& v, const SubgroupRep& h) {
  const Eigen::Index r = v.rank(), s = v.truncation();
  const auto gen = generator_element<double>(h);
  const Mat a = gen.a.conjugate();
  const auto phases = coordinate_phases<double>(h.n, gen.p, s);
  Eigen::MatrixXd lin(2 * r * r + 2 * r * s, 2 * r * s);
  for (Eigen::Index q = 0; q < 2 * r * s; ++q) {
    Mat x = Mat::Zero(r, s);
    x((q / 2) / s, (q / 2) % s) = (q % 2 == 0) ? std::complex<double>(1, 0) : std::complex<double>(0, 1);
    const Mat sym = x * v.rows().adjoint() + v.rows() * x.adjoint();
    const Mat moved = a * x * phases.asDiagonal() - x;
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < sym.size(); ++i) {
      lin(row++, q) = sym(i).real();
      lin(row++, q) = sym(i).imag();
    }
    for (Eigen::Index i = 0; i < moved.size(); ++i) {
      lin(row++, q) = moved(i).real();
      lin(row++, q) = moved(i).imag();
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(lin);
  svd.setThreshold(1e-9);
  return static_cast<int>(2 * r * s - svd.rank());
}

Outcome fixed_points() {
  std::mt19937_64 rng(3001);
  const int s = 24;
  int subgroups = 0, failures = 0, on_pattern = 0;
  for (auto [n, r] : std::vector<std::pair<int, int>>{{4, 2}, {6, 3}}) {
    for (const auto& h : enumerate_family(n, r)) {
      ++subgroups;
      const auto factors = fixed_point_factors(h, s);
      // Independent count of rows per weight class and pattern columns per row.
      long long expected = 0;
      const auto mask = fixed_support_pattern(h, s);
      for (int i = 1; i <= h.d; ++i) {
        int rows = 0, cols = 0;
        for (int j = 0; j < r; ++j) {
          if (h.m[j] == i) {
            ++rows;
            cols = static_cast<int>(mask.row(j).count());
          }
        }
        if (rows == 0) {
          for (int k = 1; k <= s; ++k) cols += ((k - i) % h.d == 0);
        }
        expected += 2LL * rows * cols - 1LL * rows * rows;
      }
      if (!fixed_set_nonempty(factors) || fixed_set_real_dimension(factors) != expected) ++failures;
      if (h.d == 1 && fixed_set_real_dimension(factors) != 2LL * r * s - 1LL * r * r) ++failures;

      std::vector<Frame<double>> comps;
      for (const auto& f : factors) comps.push_back(random_frame<double>(f.rank, f.dimension, rng));
      const auto v = embed_product(comps, h, s);
      if (!is_fixed(v, h, 1e-12)) ++failures;
      if (fixed_tangent_dimension(v, h) != expected) ++failures;

      // Frames with an off-pattern entry of size >= 1e-6 are moved.
      // A full pattern means every frame is fixed.
      if (mask.all()) {
        if (!is_fixed(random_frame<double>(r, s, rng), h, 1e-12)) ++failures;
        continue;
      }
      for (int trial = 0; trial < 5; ++trial) {
        const auto generic = random_frame<double>(r, s, rng);
        const Mat bumped = v.rows() + 1e-5 * gaussian_matrix<double>(r, s, rng);
        const auto near = gram_schmidt<double>(bumped);
        for (const auto* w : {&generic, &near}) {
          if (off_pattern_max(*w, h) >= 1e-6 && is_fixed(*w, h, 1e-12)) ++failures;
          if (off_pattern_max(*w, h) < 1e-6) ++on_pattern;
        }
      }
    }
  }
  return {failures == 0 && on_pattern == 0, std::to_string(subgroups) + " subgroups at s=24, failures " +
                                                std::to_string(failures) + ", samples left on the pattern " +
                                                std::to_string(on_pattern)};
}

// ---------------------------------------------------------------- 4
Outcome free_action() {
  std::mt19937_64 rng(4001);
  double least = 1e300;
  int failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int r = pick(rng, 1, 4), s = pick(rng, r, 16);
    const auto v = random_frame<double>(r, s, rng);
    // a = exp(i theta H) with |a - I| swept from 1e-3 upward.
    Mat hm = gaussian_matrix<double>(r, r, rng);
    hm = (hm + hm.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> eig(hm);
    const double theta = std::pow(10.0, std::uniform_real_distribution<double>(-3.0, 0.5)(rng)) /
                         eig.eigenvalues().cwiseAbs().maxCoeff();
    Vec phases(r);
    for (int k = 0; k < r; ++k) phases(k) = std::polar(1.0, theta * eig.eigenvalues()(k));
    const Mat a = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
    if ((a - Mat::Identity(r, r)).norm() < 1e-3) {
      --trial;
      continue;
    }
    const double move = stabilizer_displacement(v, a);
    least = std::min(least, move);
    if (move < 1e-6) ++failures;
  }
  return {failures == 0, "500 trials, smallest max move " + fmt(least) + ", failures " + std::to_string(failures)};
}

// ---------------------------------------------------------------- 5
Outcome bundle_suite() {
  std::mt19937_64 rng(5001);
  double worst = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = pick(rng, 1, 8), r = pick(rng, 1, 4), s = pick(rng, r, 12), p = pick(rng, 0, n - 1);
    const BundlePoint<double> pt(random_frame<double>(r, s, rng), gaussian_matrix<double>(r, 1, rng).col(0));
    const auto cp = f_map(pt);
    const Mat a = random_unitary<double>(r, rng);
    const auto lhs = f_map(gamma_act_bundle(n, p, pt));
    const CanonicalPoint<double> rhs{grassmann_action(n, p, cp.plane), module_action(n, p, cp.z)};
    worst = std::max({worst, canonical_distance(f_map(right_translate(pt, a)), cp),
                      std::abs(cp.z.norm() - pt.y.norm()), (f_inverse(cp, pt.frame).y - pt.y).norm(),
                      canonical_distance(lhs, rhs)});
  }
  return {worst <= 1e-10, "500 trials, max residual " + fmt(worst)};
}

// ---------------------------------------------------------------- 6
Outcome determinant() {
  const auto start = Clock::now();
  std::vector<std::string> bad;
  for (Parity parity : {Parity::Even, Parity::Odd}) {
    for (int n = 1; n <= 12; ++n) {
      const auto det = det_exact(band_matrix(n, parity));
      std::vector<mpz_class> want(n + 1);
      for (int k = 0; k <= n; ++k) want[k] = static_cast<long>((k % 2 ? -1 : 1) * oracle::binomial(n, k));
      if (det.coefficients() != want) bad.push_back(to_string(parity) + " n=" + std::to_string(n) + " gives " + det.to_string());
    }
  }
  const double t = seconds_since(start);
  std::string detail = fmt(t) + " s";
  if (bad.empty()) {
    detail += ", both parities match for n=1..12";
  } else {
    detail += ", mismatches: " + std::to_string(bad.size()) + " (first: " + bad.front() + ")";
  }
  return {bad.empty() && t < 10.0, detail};
}

// ---------------------------------------------------------------- 7
Outcome homotopy_endpoints() {
  std::mt19937_64 rng(7001);
  double id = 0, leak = 0, ortho = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int r = pick(rng, 1, 4), s = pick(rng, r, 16);
    const auto v = random_frame<double>(r, s, rng);
    for (Parity parity : {Parity::Even, Parity::Odd}) {
      id = std::max(id, max_abs(Mat(G_map(v, 0.0, parity).rows() - pad(v, 2 * s).rows())));
      leak = std::max(leak, parity_leak(G_map(v, 1.0, parity).rows(), parity));
      for (int i = 0; i <= 10; ++i) ortho = std::max(ortho, G_map(v, i / 10.0, parity).orthonormality_residual());
    }
  }
  return {id <= 1e-12 && leak <= 1e-12 && ortho <= 1e-10,
          "G_0 deviation " + fmt(id) + ", G_1 leak " + fmt(leak) + ", orthonormality " + fmt(ortho)};
}

// ---------------------------------------------------------------- 8
Outcome ring_oracles() {
  oracle::Rng rng(8001);
  int disagree = 0, yes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Ambient amb{oracle::uniform_int(rng, 1, 2), oracle::uniform_int(rng, 1, 2)};
    std::vector<CharacterPolynomial> gens;
    const int k = oracle::uniform_int(rng, 1, 2);
    while (static_cast<int>(gens.size()) < k) {
      // Single monomials are units, which would make every instance a member.
      auto g = oracle::random_polynomial(rng, amb, 3, 1, 2);
      if (g.size() >= 2) gens.push_back(g);
    }
    CharacterPolynomial f(amb);
    if (trial % 2 == 0) {
      for (const auto& g : gens) f += oracle::random_polynomial(rng, amb, 3, 3, 2) * g;
    } else {
      f = oracle::random_polynomial(rng, amb, 4, 3, 3);
    }
    const auto got = power_ideal_member(f, gens, 1, 4);
    const bool member = got.verdict == PowerMembership::Verdict::Yes;
    if (member != oracle::generated_member_dense(f, gens, 4)) ++disagree;
    if (member && !(expand_witness(got.witness, gens, amb) == f)) ++disagree;
    yes += member;
  }
  int ring_fail = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Ambient amb{oracle::uniform_int(rng, 1, 8), oracle::uniform_int(rng, 1, 3)};
    const auto family = enumerate_family(amb.n, amb.r);
    const auto map = restriction_hom(family[oracle::uniform_int(rng, 0, static_cast<int>(family.size()) - 1)]);
    const auto f = oracle::random_polynomial(rng, amb, 6, 4);
    const auto g = oracle::random_polynomial(rng, amb, 6, 4);
    if (!(restrict(f * g, map) == restrict(f, map) * restrict(g, map))) ++ring_fail;
    if (!(restrict(f + g, map) == restrict(f, map) + restrict(g, map))) ++ring_fail;
  }
  return {disagree == 0 && ring_fail == 0, "200 membership instances (" + std::to_string(yes) + " members), " +
                                               std::to_string(disagree) + " disagreements; 500 ring-map pairs, " +
                                               std::to_string(ring_fail) + " failures"};
}

// ---------------------------------------------------------------- 9
Outcome kernel_comparison() {
  const auto start = Clock::now();
  Outcome out;
  std::ostringstream detail;
  const int degree = 3;
  for (int r = 1; r <= 3; ++r) {
    const Ambient amb{2, r};
    KernelIdeal all;
    for (int k = -1; k <= r; ++k) all.subgroups.push_back(subgroup_Hk(k, r));
    const KernelIdeal i0{{subgroup_Hk(0, r)}};

    // Brute force over every difference of two monomials in the box.
    const auto box = monomial_box(amb, degree);
    bool brute_0_in_all = true, brute_all_in_0 = true;
    for (std::size_t i = 0; i < box.size(); ++i) {
      for (std::size_t j = i + 1; j < box.size(); ++j) {
        CharacterPolynomial diff(amb);
        diff.add_term(box[i], 1);
        diff.add_term(box[j], -1);
        bool in_all = true;
        for (const auto& h : all.subgroups) in_all = in_all && oracle::restriction_vanishes_numeric(diff, h);
        const bool in_0 = oracle::restriction_vanishes_numeric(diff, i0.subgroups[0]);
        if (in_0 && !in_all) brute_0_in_all = false;
        if (in_all && !in_0) brute_all_in_0 = false;
      }
    }

    const auto forward = containment_report(i0, all, degree, 1);
    const auto backward = containment_report(all, i0, degree, 1);
    auto contained = [](const ContainmentReport& rep) {
      return rep.verdict == ContainmentReport::Verdict::ContainedWithinBounds;
    };
    // Re-check each certificate with the numeric evaluator alone.
    auto certificate_ok = [&](const ContainmentReport& rep, const KernelIdeal& a, const KernelIdeal& b) {
      if (rep.counterexample) {
        bool in_a = true, in_b = true;
        for (const auto& h : a.subgroups) in_a = in_a && oracle::restriction_vanishes_numeric(*rep.counterexample, h);
        for (const auto& h : b.subgroups) in_b = in_b && oracle::restriction_vanishes_numeric(*rep.counterexample, h);
        return in_a && !in_b;
      }
      const auto span = spanning_set(a, degree);
      if (span.size() != rep.elements_tested) return false;
      for (const auto& f : span) {
        for (const auto& h : b.subgroups) {
          if (!oracle::restriction_vanishes_numeric(f, h)) return false;
        }
      }
      return true;
    };
    const bool ok = contained(forward) == brute_0_in_all && contained(backward) == brute_all_in_0 &&
                    certificate_ok(forward, i0, all) && certificate_ok(backward, all, i0);
    if (!ok) out.pass = false;
    detail << " r=" << r << ": I_0<=I " << to_string(forward.verdict);
    if (forward.counterexample) detail << " [" << to_string(*forward.counterexample) << "]";
    detail << ", I<=I_0 " << to_string(backward.verdict) << (ok ? "" : " (oracle mismatch)") << ";";
  }
  const double t = seconds_since(start);
  if (t >= 60.0) out.pass = false;
  out.detail = fmt(t) + " s;" + detail.str();
  return out;
}

// ---------------------------------------------------------------- 10
Outcome augmentation_kernels() {
  oracle::Rng rng(10001);
  int mismatches = 0, members = 0, total = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int d : divisors(n)) {
      for (int trial = 0; trial < 200; ++trial) {
        const Ambient amb{n, oracle::uniform_int(rng, 1, 3)};
        auto f = oracle::random_polynomial(rng, amb, 6, 3);
        // Independent augmentation: coefficient sums per sigma class mod d.
        auto sums = [&](const CharacterPolynomial& p) {
          std::vector<mpz_class> out(d);
          for (const auto& [mono, c] : p.terms()) out[mono.a % d] += c;
          return out;
        };
        if (trial % 2 == 0) {
          const auto s = sums(f);
          for (int k = 0; k < d; ++k) f.add_term(CharacterMonomial{k, std::vector<int>(amb.r, 0)}, -s[k]);
        }
        const auto s = sums(f);
        const bool vanishes = std::all_of(s.begin(), s.end(), [](const mpz_class& c) { return c == 0; });
        const bool in_k = in_kernel(f, subgroup_K(d, d, n, amb.r));
        if (in_k != vanishes || in_k != oracle::restriction_vanishes_numeric(f, subgroup_K(d, d, n, amb.r))) ++mismatches;
        members += in_k;
        ++total;
      }
    }
  }
  return {mismatches == 0, std::to_string(total) + " polynomials (" + std::to_string(members) + " in the kernel), " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"family enumeration", family_enumeration},
      {"action suite", action_suite},
      {"fixed-point characterization", fixed_points},
      {"free U(r)-action", free_action},
      {"bundle isomorphism suite", bundle_suite},
      {"band determinant (1-t)^n", determinant},
      {"homotopy endpoints", homotopy_endpoints},
      {"ring oracle equivalence", ring_oracles},
      {"I_0 versus intersection of kernels", kernel_comparison},
      {"K_{d,d} kernel via torus augmentation", augmentation_kernels},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result = {false, std::string("exception: ") + e.what()};
    }
    if (!result.pass) ++failed;
    std::cout << (result.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": "
              << result.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
