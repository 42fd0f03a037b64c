#pragma once

#include "nervelab/cover.hpp"
#include "nervelab/simplicial_map.hpp"

namespace nervelab {

/// A piece-to-piece assignment between covers.  Validity (nonempty
/// intersections map to nonempty intersections) is checked, never assumed.
struct Carrier {
    Cover domain;
    Cover codomain;
    std::map<PieceName, PieceName> assignment;

    const PieceName& operator()(const PieceName& name) const { return assignment.at(name); }
};

/// Checks totality and codomain name validity only.
Carrier make_carrier(Cover domain, Cover codomain, std::map<PieceName, PieceName> assignment);

struct CarrierValidation {
    bool valid = false;
    std::vector<PieceName> violating;  // least violating collection when invalid
};

/// Valid iff the image of every nerve face of the domain spans a nerve face
/// of the codomain; equivalently the name map induces a simplicial map of
/// nerves.
CarrierValidation validate_carrier(const Carrier& C);

/// D after C; requires the codomain of C to equal the domain of D.
Carrier compose(const Carrier& C, const Carrier& D);

/// Present iff the assignment is bijective onto the codomain names and the
/// inverse assignment validates.
std::optional<Carrier> invert(const Carrier& C);

/// F |-> st v(F): domain F, codomain the open-star cover of the nerve of F.
Carrier S_carrier(const Cover& F);

/// F |-> bst v(F): domain F, codomain the barycentric-star cover of the
/// nerve of F.
Carrier B_carrier(const Cover& F);

/// An invertible carrier between the covers, found through a nerve
/// isomorphism, or nothing.  Throws ResourceLimit past the search cap.
std::optional<Carrier> covers_isomorphic(const Cover& F, const Cover& G);

struct CarriedCheck {
    bool holds = false;
    std::string witness;  // violating piece/face description when it fails
};

/// f(F) inside C(F) for every domain piece F, facewise.  Requires f.source
/// to equal the domain base (use subdivide_domain for maps off the
/// subdivision).
CarriedCheck is_carried(const SimplicialMap& f, const Carrier& C);

/// Facewise rendering of the pointwise weak condition: every source face
/// has one piece containing it whose assigned piece contains its image.
CarriedCheck is_weakly_carried(const SimplicialMap& f, const Carrier& C);

/// Same assignment over the subdivided domain cover; the carrier a
/// cone-constructed map is checked against.
Carrier subdivide_domain(const Carrier& C);

/// Cone certificates: per codomain collection, an apex of the collection's
/// intersection.
using ConeCertificates = std::map<std::vector<PieceName>, Vertex>;

/// Computes apexes (via is_cone) for every collection the cone constructor
/// will need for C.  Collections whose intersection is not a cone are left
/// out.
ConeCertificates compute_cone_certificates(const Carrier& C);

/// Finite carrier-theorem constructor: sends the barycenter of each face of
/// the domain base to the certified apex of the intersection of its image
/// collection.  Nested flags meet nested cones, so the result is simplicial;
/// it is asserted to be carried by the subdivided carrier.
/// Throws MalformedInput when a certificate is missing or the carrier is
/// invalid; requires a closed domain and codomain.
SimplicialMap carried_map_via_cones(const Carrier& C, const ConeCertificates& cones);

struct ExtensionResult {
    std::optional<SimplicialMap> map;
    std::optional<Simplex> violating_flag;  // set when extension fails
};

/// Relative version: keeps f0 on its subcomplex of the subdivided base and
/// fills the remaining barycenters with apexes.  A flag whose mixed image
/// does not span a face is reported instead of silently repaired.
ExtensionResult extend_carried_map(const SimplicialMap& f0, const Carrier& C,
                                   const ConeCertificates& cones);

/// The barycentric least-piece canonical map sd(base) -> N(F) of a closed
/// cover: b(s) goes to the least piece containing s.
SimplicialMap canonical_nerve_map(const Cover& F);

/// The canonical-map law: on every flag, the image pieces all contain the
/// flag's minimal face.
CarriedCheck is_carried_by_K(const SimplicialMap& h, const Cover& F);

}  // namespace nervelab
