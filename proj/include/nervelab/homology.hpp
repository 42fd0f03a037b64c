#pragma once

#include <optional>

#include "nervelab/chain.hpp"
#include "nervelab/collapse.hpp"

namespace nervelab {

/// Per-degree Betti numbers and torsion coefficients.  All nerve-theorem
/// verdicts in this library compare homology profiles; homology is the
/// declared proxy for homotopy-level statements throughout.
struct HomologyProfile {
    int min_degree = 0;
    std::vector<long long> betti;               // betti[i]: degree min_degree + i
    std::vector<std::vector<Int>> torsion;      // sorted coefficients > 1

    long long betti_at(int degree) const;
    std::vector<Int> torsion_at(int degree) const;
    int top_degree() const { return min_degree + static_cast<int>(betti.size()) - 1; }
    bool trivial() const;

    /// Degreewise equality with implicit zeros outside the stored range.
    bool operator==(const HomologyProfile& other) const;
};

/// Integer homology of a chain complex via Smith normal form.
HomologyProfile homology(const ChainComplex& C);

/// Simplicial homology of K; the reduced flavor augments degree -1.
HomologyProfile homology(const SimplicialComplex& K, bool reduced = false);

enum class YesNo { Yes, No };

/// Quasi-isomorphism test: the mapping cone of f must have vanishing
/// homology (Betti and torsion) in every degree, or in degrees up to
/// degree_bound when one is given.
YesNo is_quasi_iso(const ChainMap& f, std::optional<int> degree_bound = std::nullopt);

enum class ConnVerdict { Connected, NotConnected, Unknown };

/// k-connectivity certificate.  Exact for k <= 0 (nonemptiness and graph
/// connectivity); for k >= 1 a negative answer comes from nonzero reduced
/// homology in degrees <= k and a positive one additionally needs a
/// 1-connectivity certificate (cone, collapse, or a trivialized edge-path
/// group presentation).  Unknown otherwise.
ConnVerdict connectivity_certificate(const SimplicialComplex& K, int k);

/// Attempts to reduce the edge-path group presentation of a connected
/// complex to the trivial group with a bounded, deterministic sequence of
/// Tietze moves.  One-sided: false proves nothing.
bool edge_path_group_trivializes(const SimplicialComplex& K, std::size_t budget = 10000);

/// Number of connected components of the 1-skeleton.
std::size_t component_count(const SimplicialComplex& K);

}  // namespace nervelab
