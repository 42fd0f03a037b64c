#pragma once

#include <json.hpp>

#include "nervelab/verify.hpp"

namespace nervelab {

/// All emission is canonical (sorted vertices and facets, fixed key order)
/// so identical inputs produce identical bytes.
using Json = nlohmann::ordered_json;

Json complex_to_json(const SimplicialComplex& K);
SimplicialComplex complex_from_json(const Json& j);

Json cover_to_json(const Cover& cover);
/// A "complex" entry may be an inline object or a path string; paths are
/// resolved by the loader callback (the CLI reads files, tests may inject).
Cover cover_from_json(const Json& j,
                      const std::function<Json(const std::string&)>& load_path = {});

Json carrier_to_json(const Carrier& C);
Carrier carrier_from_json(const Json& j,
                          const std::function<Json(const std::string&)>& load_path = {});

Json map_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j);

Json nerve_to_json(const Nerve& N);
Json homology_to_json(const HomologyProfile& H);
Json regularity_to_json(const RegularityReport& R);
Json equivalence_to_json(const EquivalenceReport& R);

std::string verdict_name(Verdict3 v);
std::string conn_name(ConnVerdict v);

}  // namespace nervelab
