#pragma once

#include "nervelab/carrier.hpp"

namespace nervelab {

/// Facewise closeness: every source face has a cover piece holding the
/// images under both maps.
CarriedCheck g_close(const SimplicialMap& f, const SimplicialMap& g, const Cover& G);

/// Contiguity: on every source face the two images jointly span a face of
/// the target.  Contiguous simplicial maps are homotopic; this is the
/// desk-scale homotopy currency.
CarriedCheck contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Breadth-first search over single-vertex reassignments that keep the map
/// simplicial and each step contiguous.  Returns f = h_0, ..., h_k = g with
/// k <= max_steps, or nothing when no chain is found within the budget.
std::optional<std::vector<SimplicialMap>> contiguity_chain(
    const SimplicialMap& f, const SimplicialMap& g, std::size_t max_steps,
    std::size_t state_budget = 10000);

/// Verification outcome of a nerve-theorem pipeline.  The homology proxy is
/// explicit: a positive verdict certifies a quasi-isomorphism, not a
/// homotopy equivalence.
struct EquivalenceReport {
    std::string cover_id;
    RegularityReport regularity;
    HomologyProfile base_profile;
    HomologyProfile nerve_profile;
    YesNo quasi_iso = YesNo::No;
    std::optional<int> degree_bound;
    std::optional<ConnVerdict> base_one_connectivity;   // n >= 2 runs only
    std::optional<ConnVerdict> nerve_one_connectivity;  // n >= 2 runs only
    Verdict3 overall = Verdict3::Unknown;
    std::vector<std::string> proxy_notes;
};

/// Full pipeline: Regular check, canonical nerve map, induced chain map,
/// unbounded quasi-isomorphism verdict.
EquivalenceReport verify_nerve_theorem(const Cover& F, const std::string& cover_id = "");

/// Degree-bounded pipeline: NRegular(n) check and quasi-isomorphism in
/// degrees up to n - 1.
EquivalenceReport verify_n_nerve_theorem(const Cover& F, int n,
                                         const std::string& cover_id = "");

}  // namespace nervelab
