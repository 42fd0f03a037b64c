#include "nervelab/carrier.hpp"

#include <algorithm>

#include "nervelab/collapse.hpp"

namespace nervelab {

namespace {

std::string join_names(const std::vector<PieceName>& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ",") + n;
    return out;
}

bool covers_equal(const Cover& a, const Cover& b) {
    if (a.kind() != b.kind() || a.names() != b.names() || !(a.base() == b.base())) {
        return false;
    }
    for (const auto& n : a.names()) {
        if (a.piece(n).members != b.piece(n).members) return false;
    }
    return true;
}

std::vector<PieceName> image_collection(const Carrier& C, const std::vector<PieceName>& A) {
    std::vector<PieceName> img;
    for (const auto& n : A) img.push_back(C(n));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

}  // namespace

Carrier make_carrier(Cover domain, Cover codomain, std::map<PieceName, PieceName> assignment) {
    for (const auto& name : domain.names()) {
        auto it = assignment.find(name);
        if (it == assignment.end()) {
            throw MalformedInput("carrier assignment missing piece '" + name + "'");
        }
        codomain.piece(it->second);  // throws on unknown codomain name
    }
    return Carrier{std::move(domain), std::move(codomain), std::move(assignment)};
}

CarrierValidation validate_carrier(const Carrier& C) {
    // Nerve faces enumerate exactly the collections with nonempty
    // intersection; iterate them smallest-first for the least witness.
    const Nerve N = nerve(C.domain);
    for (const auto& A : N.complex.faces()) {
        std::vector<PieceName> collection(A.begin(), A.end());
        auto img = image_collection(C, collection);
        if (intersection(C.codomain, img).empty()) {
            return CarrierValidation{false, collection};
        }
    }
    return CarrierValidation{true, {}};
}

Carrier compose(const Carrier& C, const Carrier& D) {
    if (!covers_equal(C.codomain, D.domain)) {
        throw MalformedInput("compose: codomain of the first carrier differs from the "
                             "domain of the second");
    }
    std::map<PieceName, PieceName> assignment;
    for (const auto& [name, mid] : C.assignment) assignment[name] = D(mid);
    return Carrier{C.domain, D.codomain, std::move(assignment)};
}

std::optional<Carrier> invert(const Carrier& C) {
    std::map<PieceName, PieceName> inverse;
    for (const auto& [name, img] : C.assignment) {
        if (!inverse.emplace(img, name).second) return std::nullopt;  // not injective
    }
    if (inverse.size() != C.codomain.names().size()) return std::nullopt;  // not onto
    Carrier inv{C.codomain, C.domain, std::move(inverse)};
    if (!validate_carrier(inv).valid) return std::nullopt;
    return inv;
}

Carrier S_carrier(const Cover& F) {
    const Nerve N = nerve(F);
    Cover codomain = open_star_cover(N.complex);
    std::map<PieceName, PieceName> assignment;
    for (const auto& name : F.names()) {
        if (F.piece(name).empty()) {
            throw MalformedInput("S_carrier: piece '" + name + "' is empty");
        }
        assignment[name] = name;  // nerve vertices carry the piece names
    }
    return Carrier{F, std::move(codomain), std::move(assignment)};
}

Carrier B_carrier(const Cover& F) {
    const Nerve N = nerve(F);
    Cover codomain = barycentric_star_cover(N.complex);
    std::map<PieceName, PieceName> assignment;
    for (const auto& name : F.names()) {
        if (F.piece(name).empty()) {
            throw MalformedInput("B_carrier: piece '" + name + "' is empty");
        }
        assignment[name] = name;
    }
    return Carrier{F, std::move(codomain), std::move(assignment)};
}

std::optional<Carrier> covers_isomorphic(const Cover& F, const Cover& G) {
    const Nerve NF = nerve(F);
    const Nerve NG = nerve(G);
    auto bijection = complexes_isomorphic(NF.complex, NG.complex);
    if (!bijection) return std::nullopt;
    // A nerve isomorphism preserves nonempty intersections both ways, so the
    // lifted piece bijection is an invertible carrier.
    Carrier C{F, G, *bijection};
    return C;
}

CarriedCheck is_carried(const SimplicialMap& f, const Carrier& C) {
    if (!(f.source == C.domain.base())) {
        throw MalformedInput("is_carried: map source differs from the carrier's domain base");
    }
    if (!(f.target == C.codomain.base())) {
        throw MalformedInput("is_carried: map target differs from the carrier's codomain base");
    }
    for (const auto& name : C.domain.names()) {
        const Piece& piece = C.domain.piece(name);
        const Piece& target = C.codomain.piece(C(name));
        for (const auto& s : piece.members) {
            if (!target.contains(image_simplex(f, s))) {
                return CarriedCheck{false, "face of piece '" + name +
                                              "' maps outside piece '" + C(name) + "'"};
            }
        }
    }
    return CarriedCheck{true, {}};
}

CarriedCheck is_weakly_carried(const SimplicialMap& f, const Carrier& C) {
    if (!(f.source == C.domain.base())) {
        throw MalformedInput("is_weakly_carried: map source differs from the domain base");
    }
    if (!(f.target == C.codomain.base())) {
        throw MalformedInput("is_weakly_carried: map target differs from the codomain base");
    }
    for (const auto& s : f.source.faces()) {
        const Simplex img = image_simplex(f, s);
        bool witnessed = false;
        for (const auto& name : C.domain.names()) {
            if (C.domain.piece(name).contains(s) &&
                C.codomain.piece(C(name)).contains(img)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) {
            std::string lbl;
            for (const auto& v : s) lbl += (lbl.empty() ? "" : ",") + v;
            return CarriedCheck{false, "no piece witnesses face {" + lbl + "}"};
        }
    }
    return CarriedCheck{true, {}};
}

Carrier subdivide_domain(const Carrier& C) {
    return Carrier{subdivided_cover(C.domain), C.codomain, C.assignment};
}

namespace {

std::vector<PieceName> pieces_containing(const Cover& cover, const Simplex& s) {
    std::vector<PieceName> out;
    for (const auto& name : cover.names()) {
        if (cover.piece(name).contains(s)) out.push_back(name);
    }
    return out;
}

}  // namespace

ConeCertificates compute_cone_certificates(const Carrier& C) {
    ConeCertificates cones;
    for (const auto& s : C.domain.base().faces()) {
        auto img = image_collection(C, pieces_containing(C.domain, s));
        if (img.empty() || cones.count(img)) continue;
        const SimplicialComplex piece =
            piece_as_complex(C.codomain, intersection(C.codomain, img));
        if (auto apex = is_cone(piece)) cones[img] = *apex;
    }
    return cones;
}

SimplicialMap carried_map_via_cones(const Carrier& C, const ConeCertificates& cones) {
    if (C.domain.kind() != CoverKind::Closed || C.codomain.kind() != CoverKind::Closed) {
        throw MalformedInput("carried_map_via_cones needs closed covers");
    }
    if (!validate_carrier(C).valid) {
        throw MalformedInput("carried_map_via_cones: carrier is not valid");
    }
    const SimplicialComplex sdX = barycentric_subdivision(C.domain.base());
    std::map<Vertex, Vertex> vm;
    for (const auto& s : C.domain.base().faces()) {
        auto img = image_collection(C, pieces_containing(C.domain, s));
        auto it = cones.find(img);
        if (it == cones.end()) {
            throw MalformedInput("missing cone certificate for collection {" +
                                 join_names(img) + "}");
        }
        vm[barycenter_label(s)] = it->second;
    }
    // Nested flags pick apexes of nested cones, so this is simplicial; the
    // constructor asserts it.
    SimplicialMap f = make_simplicial_map(sdX, C.codomain.base(), std::move(vm));
    if (!is_carried(f, subdivide_domain(C)).holds) {
        throw MalformedInput("carried_map_via_cones: constructed map is not carried");
    }
    return f;
}

ExtensionResult extend_carried_map(const SimplicialMap& f0, const Carrier& C,
                                   const ConeCertificates& cones) {
    if (C.domain.kind() != CoverKind::Closed || C.codomain.kind() != CoverKind::Closed) {
        throw MalformedInput("extend_carried_map needs closed covers");
    }
    if (!validate_carrier(C).valid) {
        throw MalformedInput("extend_carried_map: carrier is not valid");
    }
    const SimplicialComplex sdX = barycentric_subdivision(C.domain.base());
    const Cover sd_domain = subdivided_cover(C.domain);

    // f0 must live on a subcomplex of sd(X) and be carried by C there.
    for (const auto& s : f0.source.faces()) {
        if (!sdX.has_face(s)) {
            throw MalformedInput("extend_carried_map: f0 domain is not a subcomplex of "
                                 "the subdivided base");
        }
    }
    for (const auto& name : sd_domain.names()) {
        const Piece& piece = sd_domain.piece(name);
        const Piece& target = C.codomain.piece(C(name));
        for (const auto& s : f0.source.faces()) {
            if (piece.contains(s) && !target.contains(image_simplex(f0, s))) {
                throw MalformedInput("extend_carried_map: f0 is not carried by the carrier");
            }
        }
    }

    std::map<Vertex, Vertex> vm = f0.vertex_map;
    for (const auto& s : C.domain.base().faces()) {
        const Vertex b = barycenter_label(s);
        if (vm.count(b)) continue;
        auto img = image_collection(C, pieces_containing(C.domain, s));
        auto it = cones.find(img);
        if (it == cones.end()) {
            throw MalformedInput("missing cone certificate for collection {" +
                                 join_names(img) + "}");
        }
        vm[b] = it->second;
    }

    // The mixed images must still span faces; a failure names the flag.
    for (const auto& flag : sdX.facets()) {
        Simplex img;
        for (const auto& v : flag) img.push_back(vm.at(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!C.codomain.base().has_face(img)) {
            return ExtensionResult{std::nullopt, flag};
        }
    }
    SimplicialMap f = make_simplicial_map(sdX, C.codomain.base(), std::move(vm));
    for (const auto& name : sd_domain.names()) {
        const Piece& piece = sd_domain.piece(name);
        const Piece& target = C.codomain.piece(C(name));
        for (const auto& s : piece.members) {
            if (!target.contains(image_simplex(f, s))) {
                return ExtensionResult{std::nullopt, s};
            }
        }
    }
    return ExtensionResult{std::move(f), std::nullopt};
}

SimplicialMap canonical_nerve_map(const Cover& F) {
    if (F.kind() != CoverKind::Closed) {
        throw MalformedInput("canonical_nerve_map needs a closed cover");
    }
    const Nerve N = nerve(F);
    const SimplicialComplex sdX = barycentric_subdivision(F.base());
    std::map<Vertex, Vertex> vm;
    for (const auto& s : F.base().faces()) {
        // Least piece containing the face; pieces along a flag all contain
        // the flag's minimal face, so the map is simplicial.
        auto holders = pieces_containing(F, s);
        vm[barycenter_label(s)] = holders.front();
    }
    return make_simplicial_map(sdX, N.complex, std::move(vm));
}

CarriedCheck is_carried_by_K(const SimplicialMap& h, const Cover& F) {
    for (const auto& flag : h.source.faces()) {
        // Flag vertices sort dimension-first, so the front decodes to the
        // minimal face.
        const Simplex minimal = face_of_barycenter(flag.front());
        std::vector<PieceName> holders = pieces_containing(F, minimal);
        for (const auto& v : flag) {
            const PieceName& img = h(v);
            if (std::find(holders.begin(), holders.end(), img) == holders.end()) {
                std::string lbl;
                for (const auto& x : flag) lbl += (lbl.empty() ? "" : " < ") + x;
                return CarriedCheck{false, "flag {" + lbl + "} maps to piece '" + img +
                                              "' which misses its minimal face"};
            }
        }
    }
    return CarriedCheck{true, {}};
}

}  // namespace nervelab
