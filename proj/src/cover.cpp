#include "nervelab/cover.hpp"

#include <algorithm>
#include <functional>

namespace nervelab {

Cover Cover::closed(SimplicialComplex base, std::map<PieceName, SimplicialComplex> pieces) {
    Cover c;
    c.base_ = std::move(base);
    c.kind_ = CoverKind::Closed;
    FaceSet covered;
    for (auto& [name, sub] : pieces) {
        Piece p;
        for (const auto& s : sub.faces()) {
            if (!c.base_.has_face(s)) {
                throw MalformedInput("piece '" + name + "' is not a subcomplex of the base");
            }
            p.members.insert(s);
            covered.insert(s);
        }
        c.names_.push_back(name);
        c.pieces_[name] = std::move(p);
    }
    for (const auto& s : c.base_.faces()) {
        if (!covered.count(s)) {
            throw MalformedInput("pieces do not cover the base complex");
        }
    }
    std::sort(c.names_.begin(), c.names_.end());
    return c;
}

Cover Cover::open_stars(SimplicialComplex base, std::vector<Vertex> centers) {
    Cover c;
    c.kind_ = CoverKind::OpenStars;
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    for (const auto& v : centers) {
        auto st = open_star(base, v);
        Piece p;
        p.members = std::move(st.members);
        p.center = v;
        c.names_.push_back(v);
        c.pieces_[v] = std::move(p);
    }
    for (const auto& s : base.faces()) {
        const bool hit = std::any_of(centers.begin(), centers.end(), [&](const Vertex& v) {
            return std::binary_search(s.begin(), s.end(), v);
        });
        if (!hit) throw MalformedInput("open stars do not cover the base complex");
    }
    c.base_ = std::move(base);
    return c;
}

const Piece& Cover::piece(const PieceName& name) const {
    auto it = pieces_.find(name);
    if (it == pieces_.end()) throw MalformedInput("unknown piece '" + name + "'");
    return it->second;
}

Piece intersection(const Cover& cover, const std::vector<PieceName>& names) {
    if (names.empty()) throw MalformedInput("intersection of an empty collection");
    Piece out = cover.piece(names.front());
    out.center.reset();
    for (std::size_t i = 1; i < names.size(); ++i) {
        const Piece& p = cover.piece(names[i]);
        FaceSet next;
        for (const auto& s : out.members) {
            if (p.contains(s)) next.insert(s);
        }
        out.members = std::move(next);
        if (out.members.empty()) break;
    }
    return out;
}

Piece union_of(const Cover& cover, const std::vector<PieceName>& names) {
    if (names.empty()) throw MalformedInput("union of an empty collection");
    Piece out;
    for (const auto& n : names) {
        const Piece& p = cover.piece(n);
        out.members.insert(p.members.begin(), p.members.end());
    }
    return out;
}

Piece cover_star(const Cover& cover, const PieceName& name) {
    std::vector<PieceName> meeting;
    for (const auto& other : cover.names()) {
        if (other == name || !intersection(cover, {name, other}).empty()) {
            meeting.push_back(other);
        }
    }
    return union_of(cover, meeting);
}

Nerve nerve(const Cover& cover, std::optional<int> dimension_cap) {
    Nerve N;
    N.dimension_cap = dimension_cap;

    std::vector<PieceName> live;
    for (const auto& n : cover.names()) {
        if (!cover.piece(n).empty()) live.push_back(n);
    }
    const std::size_t m = live.size();

    // Pairwise-intersection graph; cliques of it are the only candidates.
    std::vector<std::vector<bool>> meets(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            meets[i][j] = meets[j][i] =
                !intersection(cover, {live[i], live[j]}).empty();
        }
    }

    FaceSet faces;
    std::map<Simplex, Simplex> witnesses;
    std::vector<std::size_t> stack;

    std::function<void(std::size_t, const FaceSet&)> grow =
        [&](std::size_t idx, const FaceSet& common) {
            stack.push_back(idx);
            FaceSet cur;
            if (stack.size() == 1) {
                cur = cover.piece(live[idx]).members;
            } else {
                for (const auto& s : common) {
                    if (cover.piece(live[idx]).contains(s)) cur.insert(s);
                }
            }
            if (!cur.empty()) {
                const bool within_cap =
                    !dimension_cap || static_cast<int>(stack.size()) - 1 <= *dimension_cap;
                if (within_cap) {
                    Simplex face;
                    for (auto i : stack) face.push_back(live[i]);
                    std::sort(face.begin(), face.end());
                    faces.insert(face);
                    witnesses[face] = *cur.begin();
                    for (std::size_t next = idx + 1; next < m; ++next) {
                        const bool pair_ok = std::all_of(
                            stack.begin(), stack.end(),
                            [&](std::size_t i) { return meets[i][next]; });
                        if (pair_ok) grow(next, cur);
                    }
                }
            }
            stack.pop_back();
        };
    for (std::size_t i = 0; i < m; ++i) grow(i, {});

    N.complex = complex_from_face_set(faces);
    N.witnesses = std::move(witnesses);
    return N;
}

Cover open_star_cover(const SimplicialComplex& K) {
    return Cover::open_stars(K, K.vertices());
}

Cover barycentric_star_cover(const SimplicialComplex& K) {
    std::map<PieceName, SimplicialComplex> pieces;
    for (const auto& v : K.vertices()) {
        pieces[v] = barycentric_star(K, v);
    }
    return Cover::closed(barycentric_subdivision(K), std::move(pieces));
}

Cover subdivided_cover(const Cover& cover) {
    std::map<PieceName, SimplicialComplex> pieces;
    for (const auto& name : cover.names()) {
        pieces[name] = order_complex(cover.piece(name).members);
    }
    return Cover::closed(barycentric_subdivision(cover.base()), std::move(pieces));
}

SimplicialComplex piece_as_complex(const Cover& cover, const Piece& piece) {
    if (cover.kind() == CoverKind::Closed) {
        return complex_from_face_set(piece.members);
    }
    // Open pieces: certify through the closed carrier inside sd(base).
    return order_complex(piece.members);
}

std::pair<Verdict3, std::string> certify_contractible(const SimplicialComplex& K) {
    if (K.empty()) return {Verdict3::Fails, "empty space"};
    if (auto apex = is_cone(K)) {
        return {Verdict3::Holds, "cone with apex " + *apex};
    }
    if (collapse_to_point(K, 10000) == CollapseVerdict::Collapsible) {
        return {Verdict3::Holds, "collapses to a point"};
    }
    const HomologyProfile H = homology(K, /*reduced=*/true);
    if (!H.trivial()) {
        for (int k = H.min_degree; k <= H.top_degree(); ++k) {
            if (H.betti_at(k) != 0 || !H.torsion_at(k).empty()) {
                return {Verdict3::Fails,
                        "homology obstruction in degree " + std::to_string(k) +
                            " (reduced betti " + std::to_string(H.betti_at(k)) +
                            (H.torsion_at(k).empty() ? "" : ", torsion present") + ")"};
            }
        }
    }
    if (edge_path_group_trivializes(K)) {
        return {Verdict3::Holds, "trivial reduced homology and trivialized edge-path group"};
    }
    return {Verdict3::Unknown, "trivial reduced homology, 1-connectivity not certified"};
}

RegularityReport check_regularity(const Cover& cover, RegularityMode mode,
                                  std::optional<int> n) {
    RegularityReport report;
    report.mode = mode;
    report.n = n;
    if (mode == RegularityMode::NRegular) {
        if (!n || *n < 0) throw MalformedInput("NRegular mode needs n >= 0");
    }

    report.proxy_note =
        "contractibility / connectivity certificates proxy the absolute-extensor "
        "condition";
    if (cover.kind() == CoverKind::OpenStars) {
        report.proxy_note +=
            "; open-star pieces certified through their closed carriers in the "
            "barycentric subdivision";
    }

    const Nerve N = nerve(cover);
    bool any_fails = false, any_unknown = false;
    for (const auto& A : N.complex.faces()) {
        std::vector<PieceName> collection(A.begin(), A.end());
        CollectionReport entry;
        entry.collection = collection;

        if (mode == RegularityMode::NRegular) {
            const int need = *n - static_cast<int>(collection.size());
            const SimplicialComplex piece =
                piece_as_complex(cover, intersection(cover, collection));
            switch (connectivity_certificate(piece, need)) {
                case ConnVerdict::Connected:
                    entry.verdict = Verdict3::Holds;
                    entry.certificate = std::to_string(need) + "-connected";
                    break;
                case ConnVerdict::NotConnected:
                    entry.verdict = Verdict3::Fails;
                    entry.certificate = "not " + std::to_string(need) + "-connected";
                    break;
                case ConnVerdict::Unknown:
                    entry.verdict = Verdict3::Unknown;
                    entry.certificate =
                        std::to_string(need) + "-connectivity not certified";
                    break;
            }
        } else {
            const Piece target = (mode == RegularityMode::Regular)
                                     ? intersection(cover, collection)
                                     : union_of(cover, collection);
            auto [verdict, cert] = certify_contractible(piece_as_complex(cover, target));
            entry.verdict = verdict;
            entry.certificate = cert;
        }
        any_fails |= entry.verdict == Verdict3::Fails;
        any_unknown |= entry.verdict == Verdict3::Unknown;
        report.entries.push_back(std::move(entry));
    }
    report.overall = any_fails ? Verdict3::Fails
                               : (any_unknown ? Verdict3::Unknown : Verdict3::Holds);
    return report;
}

}  // namespace nervelab
