#pragma once

#include <map>

#include "nervelab/complex.hpp"

namespace nervelab {

/// A vertex map whose image on every face spans a face of the target.
/// Collapsing is permitted: the image vertex set may be smaller.
struct SimplicialMap {
    SimplicialComplex source;
    SimplicialComplex target;
    std::map<Vertex, Vertex> vertex_map;

    const Vertex& operator()(const Vertex& v) const { return vertex_map.at(v); }
};

/// Validates totality, codomain membership, and simpliciality on facets.
/// Throws MalformedInput on violation.
SimplicialMap make_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                  std::map<Vertex, Vertex> vertex_map);

/// Validation without construction; returns the failure reason or empty.
std::string simplicial_map_violation(const SimplicialComplex& source,
                                     const SimplicialComplex& target,
                                     const std::map<Vertex, Vertex>& vertex_map);

/// Sorted, deduplicated image vertex set of a face.
Simplex image_simplex(const SimplicialMap& f, const Simplex& s);

SimplicialMap identity_map(const SimplicialComplex& K);

/// g after f; requires f.target == g.source.
SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g);

}  // namespace nervelab
