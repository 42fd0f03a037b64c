#pragma once

#include "nervelab/cover.hpp"

namespace nervelab {
namespace gallery {

/// Named triangulations: bd_deltaN, cycleM, torus7, rp2_6, random_I.
/// Throws MalformedInput on an unknown id.
SimplicialComplex make_complex(const std::string& id);

/// Named covers: two_arcs, three_arcs, face_cover_bd_delta3, and the
/// derived open_stars:<id> / bary_stars:<id> families.
Cover make_cover(const std::string& id);

bool is_complex_id(const std::string& id);
bool is_cover_id(const std::string& id);

/// The canonical acceptance list: 6 named complexes plus 10 seeded random
/// ones with at most 8 vertices.  Stable across runs.
std::vector<std::string> suite();

/// Closed covers exercised by the acceptance suite.
std::vector<std::string> suite_covers();

/// Boundary of the N-simplex.
SimplicialComplex bd_delta(int n);

/// The M-gon.
SimplicialComplex cycle(int m);

/// Clique complex of a seeded random graph, capped at dimension 3 to keep
/// subdivisions desk-scale.
SimplicialComplex random_complex(unsigned seed, int vertices, double edge_probability);

/// Closed cover of a seeded random complex by k facet-generated
/// subcomplexes (round-robin facet assignment, so every piece is nonempty).
Cover random_subcomplex_cover(unsigned seed, int pieces);

}  // namespace gallery
}  // namespace nervelab
