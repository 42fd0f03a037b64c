#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nervelab/errors.hpp"

namespace nervelab {

/// Vertices are printable labels; the total order on labels is lexicographic
/// and fixes every canonical ordering in the library.
using Vertex = std::string;

/// A simplex is a strictly ascending sequence of distinct vertex labels.
using Simplex = std::vector<Vertex>;

/// Orders simplices by dimension first, then lexicographically.
/// This is the iteration order for face enumerations and chain bases.
struct DimLexOrder {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using FaceSet = std::set<Simplex, DimLexOrder>;

/// Sorts and validates a vertex list into simplex form.
/// Throws MalformedInput on repeated vertices.
Simplex make_simplex(std::vector<Vertex> vertices);

/// Ascending union of the vertex sets of two simplices.
Simplex simplex_union(const Simplex& a, const Simplex& b);

/// True when every vertex of a occurs in b.
bool is_subface(const Simplex& a, const Simplex& b);

/// A finite abstract simplicial complex, stored by its inclusion-maximal
/// facets.  The full face set is precomputed at construction; all values
/// are immutable afterwards.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Canonicalizes the facet list: sorts each facet, drops duplicates and
    /// non-maximal entries.  Throws MalformedInput on a repeated vertex
    /// inside one facet.
    static SimplicialComplex from_facets(std::vector<Simplex> facets);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    const FaceSet& faces() const { return faces_; }

    bool empty() const { return facets_.empty(); }
    /// -1 for the empty complex.
    int dim() const;
    bool has_vertex(const Vertex& v) const;
    bool has_face(const Simplex& s) const { return faces_.count(s) > 0; }

    /// All faces of dimension exactly k, in lexicographic order.
    std::vector<Simplex> faces_of_dim(int k) const;

    long long euler_characteristic() const;

    /// Face counts per dimension (index = dimension).
    std::vector<std::size_t> f_vector() const;

    bool operator==(const SimplicialComplex& other) const {
        return facets_ == other.facets_;
    }
    bool operator!=(const SimplicialComplex& other) const {
        return !(*this == other);
    }

private:
    std::vector<Vertex> vertices_;   // sorted
    std::vector<Simplex> facets_;    // sorted lexicographically
    FaceSet faces_;                  // every nonempty face
};

/// All faces of dimension <= n, with maximal such faces as facets.
SimplicialComplex skeleton(const SimplicialComplex& K, int n);

/// Builds a complex whose facets are the maximal elements of a face set.
/// The set must be closed under nonempty subsets for the result to carry
/// the same faces; this is the caller's responsibility.
SimplicialComplex complex_from_face_set(const FaceSet& faces);

}  // namespace nervelab
