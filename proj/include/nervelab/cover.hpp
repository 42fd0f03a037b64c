#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nervelab/homology.hpp"
#include "nervelab/subdivision.hpp"

namespace nervelab {

using PieceName = std::string;

/// A cover piece is a set of faces of the base complex.  Closed pieces are
/// subcomplexes; open-star pieces carry their center and are upward closed
/// under coface instead.
struct Piece {
    FaceSet members;
    std::optional<Vertex> center;  // set exactly for open-star pieces

    bool empty() const { return members.empty(); }
    bool contains(const Simplex& s) const { return members.count(s) > 0; }
};

enum class CoverKind { Closed, OpenStars };

/// A named family of pieces covering a base complex.
class Cover {
public:
    /// Closed cover from named subcomplexes.  Validates that every piece is
    /// a subcomplex of base and that the pieces jointly cover base.
    static Cover closed(SimplicialComplex base,
                        std::map<PieceName, SimplicialComplex> pieces);

    /// Open-star cover with one piece per listed center, named by it.
    /// Validates coverage: every face must contain some center.
    static Cover open_stars(SimplicialComplex base, std::vector<Vertex> centers);

    const SimplicialComplex& base() const { return base_; }
    CoverKind kind() const { return kind_; }
    const std::vector<PieceName>& names() const { return names_; }
    const Piece& piece(const PieceName& name) const;
    std::size_t size() const { return names_.size(); }

private:
    SimplicialComplex base_;
    CoverKind kind_ = CoverKind::Closed;
    std::vector<PieceName> names_;  // sorted
    std::map<PieceName, Piece> pieces_;
};

/// Common member set of the named pieces; empty result means empty
/// intersection.  For open-star pieces this realizes the spanning-face rule:
/// the intersection is nonempty iff the centers span a face of the base.
Piece intersection(const Cover& cover, const std::vector<PieceName>& names);

/// Member-set union of the named pieces (a subcomplex for closed covers).
Piece union_of(const Cover& cover, const std::vector<PieceName>& names);

/// Union of every piece whose intersection with the given one is nonempty,
/// the given piece included.
Piece cover_star(const Cover& cover, const PieceName& name);

/// The nerve: vertices are the names of nonempty pieces, faces are the
/// collections with nonempty common intersection.  Each face carries a
/// witness member.  Faces above dimension_cap are omitted when a cap is
/// given.
struct Nerve {
    SimplicialComplex complex;
    std::map<Simplex, Simplex> witnesses;  // nerve face -> a common member
    std::optional<int> dimension_cap;
};

Nerve nerve(const Cover& cover, std::optional<int> dimension_cap = std::nullopt);

/// One open-star piece per vertex of K.
Cover open_star_cover(const SimplicialComplex& K);

/// One barycentric-star piece per vertex of K; a closed cover of sd(K).
/// Pieces keep the base vertex as their name.
Cover barycentric_star_cover(const SimplicialComplex& K);

/// Closed cover of sd(base) with the same piece names: each piece becomes
/// the subcomplex of flags running inside its member set.
Cover subdivided_cover(const Cover& cover);

/// The complex a piece certifies against: closed pieces directly, open
/// pieces through their closed carrier inside the subdivision.
SimplicialComplex piece_as_complex(const Cover& cover, const Piece& piece);

enum class Verdict3 { Holds, Fails, Unknown };

enum class RegularityMode { Regular, WeaklyRegular, NRegular };

struct CollectionReport {
    std::vector<PieceName> collection;
    Verdict3 verdict = Verdict3::Unknown;
    std::string certificate;  // cone apex, collapse, homology obstruction, ...
};

struct RegularityReport {
    RegularityMode mode = RegularityMode::Regular;
    std::optional<int> n;
    std::vector<CollectionReport> entries;
    Verdict3 overall = Verdict3::Unknown;
    std::string proxy_note;
};

/// Regular: every nerve-face intersection must be certified contractible.
/// WeaklyRegular: the same certificate on unions of intersecting families.
/// NRegular(n): the intersection of each size-|A| family must be
/// (n - |A|)-connected.  Contractibility and connectivity certificates are
/// proxies for the extension-theoretic conditions; the report says so.
RegularityReport check_regularity(const Cover& cover, RegularityMode mode,
                                  std::optional<int> n = std::nullopt);

/// Contractibility certificate used by check_regularity: cone, then greedy
/// collapse, then trivial reduced homology plus a 1-connectivity certificate.
std::pair<Verdict3, std::string> certify_contractible(const SimplicialComplex& K);

}  // namespace nervelab
