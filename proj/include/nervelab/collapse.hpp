#pragma once

#include <map>
#include <optional>

#include "nervelab/complex.hpp"

namespace nervelab {

/// A vertex a is an apex when every face stays a face after adjoining a;
/// equivalently a lies in every facet.  Returns the lexicographically least
/// apex, or nothing.
std::optional<Vertex> is_cone(const SimplicialComplex& K);

enum class CollapseVerdict { Collapsible, Unknown };

/// Greedy elementary collapses: repeatedly removes the first free face (in
/// dimension-then-lexicographic order) together with its unique proper
/// coface.  Collapsible iff a single vertex remains within the budget.
/// Unknown is a verdict, not an error.
CollapseVerdict collapse_to_point(const SimplicialComplex& K, std::size_t step_budget);

/// Backtracking search for a face-preserving vertex bijection.  Returns a
/// witness bijection K1 -> K2 or nothing.  Throws ResourceLimit when either
/// complex exceeds the vertex cap.
std::optional<std::map<Vertex, Vertex>> complexes_isomorphic(
    const SimplicialComplex& K1, const SimplicialComplex& K2,
    std::size_t vertex_cap = 32);

}  // namespace nervelab
