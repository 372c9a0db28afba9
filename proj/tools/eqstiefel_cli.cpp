// Batch front end. Every command prints one compact JSON document (trace
// prints one per grid point) and exits 0 on success, 1 on a violated
// property, a non-member or a failed containment, 2 on usage errors.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqstiefel/bundle.hpp"
#include "eqstiefel/character_ring.hpp"
#include "eqstiefel/family.hpp"
#include "eqstiefel/homotopy.hpp"
#include "eqstiefel/ideals.hpp"
#include "eqstiefel/json_io.hpp"
#include "eqstiefel/stiefel.hpp"
#include "eqstiefel/univariate.hpp"

namespace {

using namespace eqs;
using Mat = ComplexMatrix<double>;
using Vec = ComplexVector<double>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Session {
  int n = 2;
  int r = 2;
  int s = 4;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  int degree = 2;
  int window = 4;
  int maxpow = 4;
  int power = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& text) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw UsageError("expected an integer, got '" + text + "'");
  return value;
}

/// H<k> | K<d>,<j> | F<index> | <d>:<m1>,<m2>,...
SubgroupRep parse_subgroup(const std::string& spec, const Session& cfg) {
  if (spec.empty()) throw UsageError("empty subgroup spec");
  if (spec[0] == 'H') {
    if (cfg.n != 2) throw UsageError("H<k> subgroups need --n 2");
    return subgroup_Hk(to_int(spec.substr(1)), cfg.r);
  }
  if (spec[0] == 'K') {
    const auto parts = split(spec.substr(1), ',');
    if (parts.size() != 2) throw UsageError("K subgroups are written K<d>,<j>");
    return subgroup_K(to_int(parts[0]), to_int(parts[1]), cfg.n, cfg.r);
  }
  if (spec[0] == 'F') {
    const auto family = enumerate_family(cfg.n, cfg.r);
    const int idx = to_int(spec.substr(1));
    if (idx < 0 || idx >= static_cast<int>(family.size())) throw UsageError("family index out of range");
    return family[idx];
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("unrecognized subgroup spec '" + spec + "'");
  std::vector<int> m;
  for (const auto& w : split(spec.substr(colon + 1), ',')) m.push_back(to_int(w));
  if (static_cast<int>(m.size()) != cfg.r) throw UsageError("weight count must equal --r");
  return SubgroupRep::make(cfg.n, to_int(spec.substr(0, colon)), m);
}

struct ParsedIdeal {
  bool is_j = false;
  IdealSpec spec;
};

/// A subgroup spec, I, F, J, cap:<sub>;<sub>;... or gens:<poly>;<poly>;...
ParsedIdeal parse_ideal(const std::string& text, const Session& cfg) {
  const Ambient amb{cfg.n, cfg.r};
  if (text == "J") {
    if (cfg.n != 2) throw UsageError("J needs --n 2");
    ParsedIdeal out{true, KernelIdeal{}};
    for (int k = -1; k <= cfg.r; ++k) std::get<KernelIdeal>(out.spec).subgroups.push_back(subgroup_Hk(k, cfg.r));
    return out;
  }
  if (text == "I") {
    if (cfg.n != 2) throw UsageError("I needs --n 2");
    KernelIdeal k;
    for (int i = -1; i <= cfg.r; ++i) k.subgroups.push_back(subgroup_Hk(i, cfg.r));
    return {false, k};
  }
  if (text == "F") return {false, KernelIdeal{enumerate_family(cfg.n, cfg.r)}};
  if (text.rfind("cap:", 0) == 0) {
    KernelIdeal k;
    for (const auto& item : split(text.substr(4), ';')) k.subgroups.push_back(parse_subgroup(item, cfg));
    if (k.subgroups.empty()) throw UsageError("cap: needs at least one subgroup");
    return {false, k};
  }
  if (text.rfind("gens:", 0) == 0) {
    GeneratedIdeal g;
    for (const auto& item : split(text.substr(5), ';')) g.generators.push_back(parse_polynomial(item, amb));
    if (g.generators.empty()) throw UsageError("gens: needs at least one generator");
    return {false, g};
  }
  return {false, KernelIdeal{{parse_subgroup(text, cfg)}}};
}

IdealSpec plain_ideal(const std::string& text, const Session& cfg) {
  auto parsed = parse_ideal(text, cfg);
  if (parsed.is_j) throw UsageError("J is an ideal of the symmetric subring; use it with ring member only");
  return parsed.spec;
}

Json ideal_json(const IdealSpec& ideal) {
  if (const auto* k = std::get_if<KernelIdeal>(&ideal)) {
    Json subs = Json::array();
    for (const auto& h : k->subgroups) subs.push_back(to_json(h));
    return Json{{"kind", "kernel"}, {"subgroups", subs}};
  }
  Json gens = Json::array();
  for (const auto& g : std::get<GeneratedIdeal>(ideal).generators) gens.push_back(to_string(g));
  return Json{{"kind", "generated"}, {"generators", gens}};
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_family_enumerate(const Session& cfg) {
  const auto family = enumerate_family(cfg.n, cfg.r);
  Json list = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    Json entry = to_json(family[i]);
    entry["index"] = i;
    entry["composition"] = composition_of(family[i]).parts;
    list.push_back(entry);
  }
  emit(Json{{"n", cfg.n}, {"r", cfg.r}, {"count", family.size()}, {"subgroups", list}});
  return 0;
}

int cmd_stiefel_fixed(const Session& cfg, const std::string& subgroup) {
  const auto h = parse_subgroup(subgroup, cfg);
  const auto factors = fixed_point_factors(h, cfg.s);
  Json list = Json::array();
  for (const auto& f : factors) list.push_back(Json::array({f.rank, f.dimension}));
  const bool nonempty = fixed_set_nonempty(factors);
  emit(Json{{"subgroup", to_json(h)},
            {"s", cfg.s},
            {"mask", to_json(fixed_support_pattern(h, cfg.s))},
            {"factors", list},
            {"nonempty", nonempty},
            {"real_dimension", nonempty ? Json(fixed_set_real_dimension(factors)) : Json(nullptr)}});
  return 0;
}

int cmd_stiefel_verify_action(const Session& cfg, int trials) {
  std::mt19937_64 rng(cfg.seed);
  double assoc = 0, identity = 0, preserve = 0, composed = 0;
  int violations = 0;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < trials; ++trial) {
    const int n = pick(1, 8);
    const int r = pick(1, 4);
    const int s = pick(r, 16);
    const auto v = random_frame<double>(r, s, rng);
    const auto g = GroupElement<double>::make(n, pick(0, n - 1), random_unitary<double>(r, rng));
    const auto h = GroupElement<double>::make(n, pick(0, n - 1), random_unitary<double>(r, rng));
    const double a = max_abs(Mat(act(g * h, v).rows() - act(g, act(h, v)).rows()));
    const double i = max_abs(Mat(act(GroupElement<double>::identity(n, r), v).rows() - v.rows()));
    const double p = act(g, v).orthonormality_residual();
    Frame<double> chain = v;
    for (int step = 0; step < 100; ++step) chain = Frame<double>(act(g, chain).rows(), 1e-6);
    const double c = chain.orthonormality_residual();
    if (a > cfg.tol || i > cfg.tol || p > cfg.tol || c > 1e-9) ++violations;
    assoc = std::max(assoc, a);
    identity = std::max(identity, i);
    preserve = std::max(preserve, p);
    composed = std::max(composed, c);
  }
  emit(Json{{"verdict", violations == 0 ? "PASS" : "FAIL"},
            {"trials", trials},
            {"seed", cfg.seed},
            {"tol", cfg.tol},
            {"violations", violations},
            {"max_associativity", assoc},
            {"max_identity", identity},
            {"max_orthonormality", preserve},
            {"max_composed_orthonormality", composed}});
  return violations == 0 ? 0 : 1;
}

int cmd_bundle_check(const Session& cfg, int trials) {
  std::mt19937_64 rng(cfg.seed);
  double well = 0, iso = 0, round = 0, square = 0;
  int violations = 0;
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int trial = 0; trial < trials; ++trial) {
    const int n = pick(1, 8);
    const int r = pick(1, 4);
    const int s = pick(r, 12);
    const BundlePoint<double> pt(random_frame<double>(r, s, rng), gaussian_matrix<double>(r, 1, rng).col(0));
    const auto cp = f_map(pt);
    const Mat a = random_unitary<double>(r, rng);
    const double w = canonical_distance(f_map(right_translate(pt, a)), cp);
    const double i = std::abs(cp.z.norm() - pt.y.norm());
    const double b = (f_inverse(cp, pt.frame).y - pt.y).norm();
    const int p = pick(0, n - 1);
    const auto lhs = f_map(gamma_act_bundle(n, p, pt));
    const CanonicalPoint<double> rhs{grassmann_action(n, p, cp.plane), module_action(n, p, cp.z)};
    const double q = canonical_distance(lhs, rhs);
    if (w > cfg.tol || i > cfg.tol || b > cfg.tol || q > cfg.tol) ++violations;
    well = std::max(well, w);
    iso = std::max(iso, i);
    round = std::max(round, b);
    square = std::max(square, q);
  }
  emit(Json{{"verdict", violations == 0 ? "PASS" : "FAIL"},
            {"trials", trials},
            {"seed", cfg.seed},
            {"tol", cfg.tol},
            {"violations", violations},
            {"max_well_definedness", well},
            {"max_isometry", iso},
            {"max_round_trip", round},
            {"max_equivariance", square}});
  return violations == 0 ? 0 : 1;
}

int cmd_ring_restrict(const Session& cfg, const std::string& poly, const std::string& subgroup) {
  const auto f = parse_polynomial(poly, Ambient{cfg.n, cfg.r});
  const auto h = parse_subgroup(subgroup, cfg);
  const auto image = restrict(f, restriction_hom(h));
  emit(Json{{"poly", to_string(f)}, {"subgroup", to_json(h)}, {"image", to_json(image)}, {"zero", image.is_zero()}});
  return 0;
}

int cmd_ring_member(const Session& cfg, const std::string& poly, const std::string& ideal_text) {
  const auto f = parse_polynomial(poly, Ambient{cfg.n, cfg.r});
  const auto parsed = parse_ideal(ideal_text, cfg);
  Json out{{"poly", to_string(f)}, {"ideal", ideal_text}};
  bool member = false;
  if (parsed.is_j) {
    const bool symmetric = is_symmetric(f);
    const auto res = in_intersection(f, std::get<KernelIdeal>(parsed.spec).subgroups);
    member = symmetric && res.member;
    out["member"] = member;
    out["symmetric"] = symmetric;
    out["certificate"] = to_json(res)["certificate"];
  } else if (const auto* k = std::get_if<KernelIdeal>(&parsed.spec)) {
    const auto res = in_intersection(f, k->subgroups);
    member = res.member;
    out["member"] = member;
    out["certificate"] = to_json(res)["certificate"];
  } else {
    const auto& gens = std::get<GeneratedIdeal>(parsed.spec).generators;
    const auto pm = power_ideal_member(f, gens, cfg.power, cfg.window);
    member = pm.verdict == PowerMembership::Verdict::Yes;
    out["member"] = member;
    out["certificate"] = to_json(pm, cfg.power, cfg.window);
  }
  emit(out);
  return member ? 0 : 1;
}

int cmd_ring_contain(const Session& cfg, const std::string& a_text, const std::string& b_text) {
  const auto a = plain_ideal(a_text, cfg);
  const auto b = plain_ideal(b_text, cfg);
  const auto report = containment_report(a, b, cfg.degree, cfg.window, cfg.power);
  Json out = to_json(report);
  out["A"] = ideal_json(a);
  out["B"] = ideal_json(b);
  emit(out);
  return report.verdict == ContainmentReport::Verdict::ContainedWithinBounds ? 0 : 1;
}

int cmd_ring_topology(const Session& cfg, const std::string& a_text, const std::string& b_text) {
  const auto a = plain_ideal(a_text, cfg);
  const auto b = plain_ideal(b_text, cfg);
  const auto report = topology_equivalence_report(a, b, cfg.maxpow, cfg.degree, cfg.window);
  const bool equivalent = report.a_in_b.least_power && report.b_in_a.least_power;
  Json out = to_json(report);
  out["equivalent_within_bounds"] = equivalent;
  out["maxpow"] = cfg.maxpow;
  out["A"] = ideal_json(a);
  out["B"] = ideal_json(b);
  emit(out);
  return equivalent ? 0 : 1;
}

int cmd_homotopy_det(int nmax, const std::string& parity_text) {
  if (nmax < 1) throw UsageError("--nmax must be positive");
  std::vector<Parity> parities;
  if (parity_text == "both") {
    parities = {Parity::Even, Parity::Odd};
  } else {
    try {
      parities = {parse_parity(parity_text)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  Json groups = Json::array();
  std::vector<std::string> failures;
  for (Parity parity : parities) {
    Json rows = Json::array();
    UnivariatePolynomial expected = UnivariatePolynomial::constant(1);
    for (int n = 1; n <= nmax; ++n) {
      expected = expected * UnivariatePolynomial::one_minus_t();
      const auto det = det_exact(band_matrix(n, parity));
      const bool ok = det == expected;
      if (!ok) failures.push_back(to_string(parity) + " n=" + std::to_string(n));
      rows.push_back(Json{{"n", n}, {"det", det.to_string()}, {"matches", ok}});
    }
    groups.push_back(Json{{"parity", to_string(parity)}, {"results", rows}});
  }
  std::string summary = "(1-t)^n confirmed for n=1.." + std::to_string(nmax);
  if (!failures.empty()) {
    summary = "(1-t)^n fails for";
    for (std::size_t i = 0; i < failures.size(); ++i) summary += (i ? ", " : " ") + failures[i];
  }
  emit(Json{{"nmax", nmax}, {"parities", groups}, {"summary", summary}});
  return failures.empty() ? 0 : 1;
}

int cmd_homotopy_trace(const Session& cfg, const std::string& parity_text, int grid) {
  Parity parity;
  try {
    parity = parse_parity(parity_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (cfg.r > cfg.s) throw UsageError("--r must not exceed --s");
  const auto v = random_frame<double>(cfg.r, cfg.s, cfg.seed);
  int violations = 0;
  for (const auto& p : homotopy_trace(v, parity, grid)) {
    if (p.orthonormality_residual > cfg.tol || !(p.gram_min_eig > 0)) ++violations;
    emit(Json{{"t", p.t},
              {"orthonormality_residual", p.orthonormality_residual},
              {"parity_leak", p.parity_leak},
              {"gram_min_eig", p.gram_min_eig}});
  }
  return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Stiefel manifold toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Session cfg;
  app.add_option("--n", cfg.n, "order of the cyclic factor Z_n")->check(CLI::PositiveNumber);
  app.add_option("--r", cfg.r, "torus rank / frame rank")->check(CLI::PositiveNumber);
  app.add_option("--s", cfg.s, "truncation")->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "numeric tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--degree", cfg.degree, "monomial degree bound")->check(CLI::NonNegativeNumber);
  app.add_option("--window", cfg.window, "multiplier exponent window")->check(CLI::NonNegativeNumber);
  app.add_option("--maxpow", cfg.maxpow, "largest power tried by ring topology")->check(CLI::PositiveNumber);
  app.add_option("--power", cfg.power, "ideal power for member/contain")->check(CLI::PositiveNumber);
  app.set_config("--config", "", "key=value file of option defaults");

  int trials = 1000;
  int nmax = 12;
  int grid = 10;
  std::string subgroup, poly, ideal, a_text, b_text, parity = "both";

  auto* family = app.add_subcommand("family", "subgroup family")->require_subcommand(1);
  auto* family_enum = family->add_subcommand("enumerate", "list the family F(n, r)");

  auto* stiefel = app.add_subcommand("stiefel", "Stiefel manifold actions")->require_subcommand(1);
  auto* fixed = stiefel->add_subcommand("fixed", "fixed set of a subgroup");
  fixed->add_option("--subgroup", subgroup, "H<k>, K<d>,<j>, F<index> or <d>:<m1>,...")->required();
  auto* verify = stiefel->add_subcommand("verify-action", "left action property suite");
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* bundle = app.add_subcommand("bundle", "bundle isomorphism")->require_subcommand(1);
  auto* equiv = bundle->add_subcommand("check-equivariance", "bundle map property suite");
  equiv->add_option("--trials", trials)->check(CLI::PositiveNumber);

  auto* ring = app.add_subcommand("ring", "representation ring")->require_subcommand(1);
  auto* restrict_cmd = ring->add_subcommand("restrict", "restriction to a subgroup");
  restrict_cmd->add_option("--poly", poly)->required();
  restrict_cmd->add_option("--subgroup", subgroup)->required();
  auto* member = ring->add_subcommand("member", "ideal membership");
  member->add_option("--poly", poly)->required();
  member->add_option("--ideal", ideal, "subgroup, I, F, J, cap:a;b or gens:p;q")->required();
  auto* contain = ring->add_subcommand("contain", "bounded ideal containment A^power <= B");
  contain->add_option("--A", a_text)->required();
  contain->add_option("--B", b_text)->required();
  auto* topology = ring->add_subcommand("topology", "compare adic topologies of A and B");
  topology->add_option("--A", a_text)->required();
  topology->add_option("--B", b_text)->required();

  auto* homotopy = app.add_subcommand("homotopy", "interleaving homotopies")->require_subcommand(1);
  auto* det = homotopy->add_subcommand("det", "band matrix determinants");
  det->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
  det->add_option("--parity", parity, "even, odd or both");
  auto* trace = homotopy->add_subcommand("trace", "frame homotopy diagnostics as JSON lines");
  trace->add_option("--parity", parity, "even or odd")->required();
  trace->add_option("--grid", grid)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*family_enum) return cmd_family_enumerate(cfg);
    if (*fixed) return cmd_stiefel_fixed(cfg, subgroup);
    if (*verify) return cmd_stiefel_verify_action(cfg, trials);
    if (*equiv) return cmd_bundle_check(cfg, trials);
    if (*restrict_cmd) return cmd_ring_restrict(cfg, poly, subgroup);
    if (*member) return cmd_ring_member(cfg, poly, ideal);
    if (*contain) return cmd_ring_contain(cfg, a_text, b_text);
    if (*topology) return cmd_ring_topology(cfg, a_text, b_text);
    if (*det) return cmd_homotopy_det(nmax, parity);
    if (*trace) return cmd_homotopy_trace(cfg, parity, grid);
  } catch (const std::exception& e) {
    // Malformed specs, out-of-range parameters and too-small bounds.
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
