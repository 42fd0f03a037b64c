#pragma once

#include "nervelab/complex.hpp"

namespace nervelab {

/// Label of the barycenter vertex of a face, "(dim:v0+v1+...)".
/// The dimension prefix makes plain lexicographic label order agree with
/// dimension-first order for dimensions below 10 (enforced).
Vertex barycenter_label(const Simplex& face);

/// Inverse of barycenter_label.  Throws MalformedInput on a label that was
/// not produced by it.
Simplex face_of_barycenter(const Vertex& label);

/// All simplices of K containing a fixed vertex.  Not a subcomplex: the
/// member set is upward closed under coface within K.
struct OpenStarSet {
    Vertex center;
    FaceSet members;
};

/// members = every face of K containing v.  Throws on an unknown vertex.
OpenStarSet open_star(const SimplicialComplex& K, const Vertex& v);

/// First barycentric subdivision: vertices are barycenter labels of the
/// faces of K, simplices are strictly nested flags of faces.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

/// The subcomplex of sd(K) generated by flags whose minimal face contains v;
/// a cone with apex barycenter_label({v}).  Throws on an unknown vertex.
SimplicialComplex barycentric_star(const SimplicialComplex& K, const Vertex& v);

/// Order complex of a face set U: vertices are barycenters of members of U,
/// simplices are chains in U under inclusion.  For an upward-closed U this
/// is the closed carrier of U inside the barycentric subdivision.
SimplicialComplex order_complex(const FaceSet& members);

/// All chains (as barycenter-label simplices) of a face set, including
/// singletons; the face set of order_complex(members).
FaceSet chain_faces(const FaceSet& members);

}  // namespace nervelab
