#pragma once

#include "json.hpp"

#include "eqstiefel/bundle.hpp"
#include "eqstiefel/character_ring.hpp"
#include "eqstiefel/family.hpp"
#include "eqstiefel/ideals.hpp"
#include "eqstiefel/stiefel.hpp"

namespace eqs {

using Json = nlohmann::ordered_json;

Json to_json(const SubgroupRep& h);
SubgroupRep subgroup_from_json(const Json& j);

/// {"terms":[{"a":..,"e":[..],"c":..}]}; coefficients are decimal strings
/// when they do not fit in 64 bits.
Json to_json(const CharacterPolynomial& f);
CharacterPolynomial polynomial_from_json(const Json& j, Ambient ambient);

Json to_json(const CyclicElement& u);

/// {"r":..,"s":..,"rows":[[[re,im],...],...]}
Json to_json(const Frame<double>& v);
Frame<double> frame_from_json(const Json& j, double tol = default_frame_tolerance<double>());

Json to_json(const ComplexMatrix<double>& m);
ComplexMatrix<double> complex_matrix_from_json(const Json& j);
Json to_json(const ComplexVector<double>& z);
ComplexVector<double> complex_vector_from_json(const Json& j);

Json to_json(const SupportMask& mask);

/// {"P":..,"z":..}
Json to_json(const CanonicalPoint<double>& cp);
CanonicalPoint<double> canonical_point_from_json(const Json& j);

/// {"frame":..,"y":..}
Json to_json(const BundlePoint<double>& pt);
BundlePoint<double> bundle_point_from_json(const Json& j);

Json to_json(const PowerMembership& pm, int power, int window);
Json to_json(const IntersectionResult& res);
Json to_json(const ContainmentReport& report);
Json to_json(const TopologyReport& report);

}  // namespace eqs
