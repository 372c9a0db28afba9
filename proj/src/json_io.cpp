#include "eqstiefel/json_io.hpp"

#include <stdexcept>

namespace eqs {

namespace {

Json integer_json(const Integer& c) {
  if (c.fits_slong_p()) return Json(static_cast<long long>(c.get_si()));
  return Json(c.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer coefficient");
}

Json complex_json(const std::complex<double>& z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const SubgroupRep& h) {
  return Json{{"n", h.n}, {"d", h.d}, {"r", h.r}, {"m", h.m}};
}

SubgroupRep subgroup_from_json(const Json& j) {
  auto h = SubgroupRep::make(j.at("n").get<int>(), j.at("d").get<int>(),
                             j.at("m").get<std::vector<int>>());
  if (j.contains("r") && j.at("r").get<int>() != h.r)
    throw std::invalid_argument("subgroup json: r does not match weight count");
  return h;
}

Json to_json(const CharacterPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [mono, c] : f.terms())
    terms.push_back(Json{{"a", mono.a}, {"e", mono.e}, {"c", integer_json(c)}});
  return Json{{"terms", terms}};
}

CharacterPolynomial polynomial_from_json(const Json& j, Ambient ambient) {
  CharacterPolynomial f(ambient);
  for (const auto& t : j.at("terms")) {
    f.add_term(CharacterMonomial{t.at("a").get<int>(), t.at("e").get<std::vector<int>>()},
               integer_from_json(t.at("c")));
  }
  return f;
}

Json to_json(const CyclicElement& u) {
  Json out = Json::array();
  for (const auto& c : u.coefficients()) out.push_back(integer_json(c));
  return out;
}

Json to_json(const ComplexMatrix<double>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix<double> complex_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  ComplexMatrix<double> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const ComplexVector<double>& z) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < z.size(); ++k) out.push_back(complex_json(z(k)));
  return out;
}

ComplexVector<double> complex_vector_from_json(const Json& j) {
  ComplexVector<double> z(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index k = 0; k < z.size(); ++k) z(k) = complex_from_json(j[k]);
  return z;
}

Json to_json(const Frame<double>& v) {
  return Json{{"r", v.rank()}, {"s", v.truncation()}, {"rows", to_json(v.rows())}};
}

Frame<double> frame_from_json(const Json& j, double tol) {
  const auto r = j.at("r").get<Eigen::Index>();
  const auto s = j.at("s").get<Eigen::Index>();
  ComplexMatrix<double> rows = complex_matrix_from_json(j.at("rows"));
  if (r == 0) rows.resize(0, s);
  if (rows.rows() != r || rows.cols() != s) throw std::invalid_argument("frame json: shape mismatch");
  return Frame<double>(std::move(rows), tol);
}

Json to_json(const SupportMask& mask) {
  Json rows = Json::array();
  for (Eigen::Index j = 0; j < mask.rows(); ++j) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < mask.cols(); ++c) row.push_back(mask(j, c) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CanonicalPoint<double>& cp) {
  return Json{{"P", to_json(cp.plane.projector)}, {"z", to_json(cp.z)}};
}

CanonicalPoint<double> canonical_point_from_json(const Json& j) {
  return CanonicalPoint<double>{GrassmannPoint<double>{complex_matrix_from_json(j.at("P"))},
                                complex_vector_from_json(j.at("z"))};
}

Json to_json(const BundlePoint<double>& pt) {
  return Json{{"frame", to_json(pt.frame)}, {"y", to_json(pt.y)}};
}

BundlePoint<double> bundle_point_from_json(const Json& j) {
  return BundlePoint<double>(frame_from_json(j.at("frame")), complex_vector_from_json(j.at("y")));
}

Json to_json(const PowerMembership& pm, int power, int window) {
  Json witness = Json::array();
  for (const auto& term : pm.witness)
    witness.push_back(Json{{"factors", term.factors}, {"multiplier", to_string(term.multiplier)}});
  return Json{{"verdict", pm.verdict == PowerMembership::Verdict::Yes ? "YES" : "NO-WITHIN-WINDOW"},
              {"power", power},
              {"window", window},
              {"columns", pm.columns},
              {"witness", witness}};
}

Json to_json(const IntersectionResult& res) {
  Json out{{"member", res.member}};
  if (res.certificate) {
    out["certificate"] = Json{{"subgroup", to_json(*res.certificate)},
                              {"image", to_json(*res.failing_image)}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

Json to_json(const ContainmentReport& report) {
  Json cert;
  if (report.counterexample) {
    cert["element"] = to_string(*report.counterexample);
    cert["element_terms"] = to_json(*report.counterexample)["terms"];
    if (report.failure && report.failure->failing_subgroup) {
      cert["subgroup"] = to_json(*report.failure->failing_subgroup);
      cert["image"] = to_json(*report.failure->failing_image);
    }
    if (report.failure && report.failure->lattice) {
      cert["lattice"] = to_json(*report.failure->lattice, 1, report.window);
    }
  } else {
    cert["sweep"] = "exhaustive";
    cert["elements_tested"] = report.elements_tested;
  }
  return Json{{"verdict", to_string(report.verdict)},
              {"direction", report.direction},
              {"power", report.power},
              {"degree", report.degree},
              {"window", report.window},
              {"elements_tested", report.elements_tested},
              {"certificate", cert}};
}

Json to_json(const TopologyReport& report) {
  auto direction = [](const TopologyReport::Direction& d) {
    return Json{{"direction", d.direction},
                {"power", d.least_power ? Json(*d.least_power) : Json("NONE-within-bounds")},
                {"report", to_json(d.last)}};
  };
  return Json{{"A_in_B", direction(report.a_in_b)}, {"B_in_A", direction(report.b_in_a)}};
}

}  // namespace eqs
