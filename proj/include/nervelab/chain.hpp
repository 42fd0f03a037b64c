#pragma once

#include <string>
#include <vector>

#include "nervelab/simplicial_map.hpp"
#include "nervelab/snf.hpp"

namespace nervelab {

/// A bounded chain complex of free abelian groups with labelled bases.
/// boundary[k] maps degree-k chains to degree-(k-1) chains; boundary[0] is
/// the 0 x |basis 0| matrix (or the augmentation when min_degree == -1).
struct ChainComplex {
    int min_degree = 0;  // 0, or -1 for augmented complexes
    std::vector<std::vector<std::string>> basis;  // basis[i]: degree min_degree + i
    std::vector<IntegerMatrix> boundary;  // boundary[i]: C_(min_degree+i) -> one degree down

    int top_degree() const { return min_degree + static_cast<int>(basis.size()) - 1; }
    std::size_t rank_at(int degree) const;
    const IntegerMatrix& boundary_at(int degree) const;

    /// Checks d(k-1) . d(k) == 0 for every k.
    bool boundaries_compose_to_zero() const;
};

/// Simplicial chain complex with canonical per-degree bases (faces in
/// lexicographic order) and signed incidence boundary matrices.
ChainComplex chain_complex(const SimplicialComplex& K);

/// Adds a degree -1 generator with the augmentation map as boundary[0].
ChainComplex augment(const ChainComplex& C);

/// A degreewise matrix map between chain complexes commuting with the
/// boundaries.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<IntegerMatrix> degree;  // degree[k]: source C_k -> target C_k, from k = 0

    bool commutes() const;
};

/// Chain map induced by a simplicial map: a simplex goes to its image with
/// orientation sign, or to zero when the map collapses it.
ChainMap induced_chain_map(const SimplicialMap& f);

/// Cone of f with degree-k generators (source degree k-1) + (target degree k)
/// and differential (a, b) -> (-da, db - f a).
ChainComplex mapping_cone(const ChainMap& f);

}  // namespace nervelab
