#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qmat/classical.hpp"
#include "qmat/morphism.hpp"
#include "qmat/quiver_matroid.hpp"
#include "qmat/tits.hpp"

namespace qmat {

using Json = nlohmann::json;

Json load_json_file(const std::string& path);

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);

Json matrix_to_json(const SubmonomialMatrix& phi);
SubmonomialMatrix matrix_from_json(const Json& j);

Json classical_to_json(const ClassicalMatroid& m);
ClassicalMatroid classical_from_json(const Json& j);

Json pointed_map_to_json(const PointedMap& sigma);
PointedMap pointed_map_from_json(const Json& j, const GroundSet& source,
                                 const GroundSet& target);

Json rep_to_json(const F1Rep& rep);
F1Rep rep_from_json(const Json& j);

Json grading_to_json(const Grading& g, const F1Rep& rep);
Grading grading_from_json(const Json& j, const F1Rep& rep);
std::vector<Grading> gradings_from_json(const Json& j, const F1Rep& rep);

Json vector_to_json(const VectorF& x);
VectorF vector_from_json(const Json& j, const GroundSet& ground, const Idyll& idyll);

Json point_to_json(const QuiverMatroid& m);
Json euler_report_to_json(const EulerReport& r);

}  // namespace qmat
