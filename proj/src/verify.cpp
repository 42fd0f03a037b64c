#include "nervelab/verify.hpp"

#include <algorithm>
#include <deque>

namespace nervelab {

namespace {

std::string face_label(const Simplex& s) {
    std::string out;
    for (const auto& v : s) out += (out.empty() ? "" : ",") + v;
    return "{" + out + "}";
}

void require_parallel(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.source == g.source) || !(f.target == g.target)) {
        throw MalformedInput("maps do not share source and target");
    }
}

}  // namespace

CarriedCheck g_close(const SimplicialMap& f, const SimplicialMap& g, const Cover& G) {
    require_parallel(f, g);
    if (!(f.target == G.base())) {
        throw MalformedInput("g_close: cover does not cover the maps' target");
    }
    for (const auto& s : f.source.faces()) {
        const Simplex fi = image_simplex(f, s);
        const Simplex gi = image_simplex(g, s);
        bool witnessed = false;
        for (const auto& name : G.names()) {
            const Piece& p = G.piece(name);
            if (p.contains(fi) && p.contains(gi)) {
                witnessed = true;
                break;
            }
        }
        if (!witnessed) {
            return CarriedCheck{false, "no piece holds both images of " + face_label(s)};
        }
    }
    return CarriedCheck{true, {}};
}

CarriedCheck contiguous(const SimplicialMap& f, const SimplicialMap& g) {
    require_parallel(f, g);
    for (const auto& s : f.source.facets()) {
        const Simplex joint = simplex_union(image_simplex(f, s), image_simplex(g, s));
        if (!f.target.has_face(joint)) {
            return CarriedCheck{false,
                                "joint image of " + face_label(s) + " spans no face"};
        }
    }
    return CarriedCheck{true, {}};
}

std::optional<std::vector<SimplicialMap>> contiguity_chain(const SimplicialMap& f,
                                                           const SimplicialMap& g,
                                                           std::size_t max_steps,
                                                           std::size_t state_budget) {
    require_parallel(f, g);
    if (max_steps == 0) throw MalformedInput("contiguity_chain needs max_steps > 0");
    if (f.vertex_map == g.vertex_map) return std::vector<SimplicialMap>{f};

    using State = std::map<Vertex, Vertex>;
    std::map<State, State> parent;  // child -> predecessor
    std::map<State, std::size_t> depth;
    std::deque<State> queue;
    queue.push_back(f.vertex_map);
    depth[f.vertex_map] = 0;
    std::size_t expanded = 0;

    auto reconstruct = [&](State s) {
        std::vector<SimplicialMap> chain;
        for (;;) {
            chain.push_back(SimplicialMap{f.source, f.target, s});
            auto it = parent.find(s);
            if (it == parent.end()) break;
            s = it->second;
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    };

    while (!queue.empty() && expanded < state_budget) {
        const State cur = queue.front();
        queue.pop_front();
        ++expanded;
        const SimplicialMap h{f.source, f.target, cur};

        // A state directly contiguous to the goal closes the chain.
        if (depth[cur] + 1 <= max_steps && contiguous(h, g).holds) {
            auto chain = reconstruct(cur);
            chain.push_back(g);
            return chain;
        }
        if (depth[cur] + 1 >= max_steps) continue;

        for (const auto& v : f.source.vertices()) {
            for (const auto& w : f.target.vertices()) {
                if (cur.at(v) == w) continue;
                State next = cur;
                next[v] = w;
                if (depth.count(next)) continue;
                if (!simplicial_map_violation(f.source, f.target, next).empty()) continue;
                const SimplicialMap hn{f.source, f.target, next};
                if (!contiguous(h, hn).holds) continue;
                parent[next] = cur;
                depth[next] = depth[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    return std::nullopt;
}

namespace {

EquivalenceReport run_pipeline(const Cover& F, const std::string& cover_id,
                               std::optional<int> n) {
    EquivalenceReport report;
    report.cover_id = cover_id;
    report.proxy_notes.push_back("homology proxy for homotopy");
    report.proxy_notes.push_back(
        "carried/close conditions rendered facewise on the combinatorial structure");

    if (n) {
        report.degree_bound = *n - 1;
        report.regularity = check_regularity(F, RegularityMode::NRegular, *n);
    } else {
        report.regularity = check_regularity(F, RegularityMode::Regular);
    }

    const Nerve N = nerve(F);
    const SimplicialMap kappa = canonical_nerve_map(F);
    report.base_profile = homology(F.base());
    report.nerve_profile = homology(N.complex);
    report.quasi_iso = is_quasi_iso(induced_chain_map(kappa), report.degree_bound);

    if (n && *n >= 2) {
        report.base_one_connectivity = connectivity_certificate(F.base(), 1);
        report.nerve_one_connectivity = connectivity_certificate(N.complex, 1);
    }

    if (report.regularity.overall == Verdict3::Fails || report.quasi_iso == YesNo::No) {
        report.overall = Verdict3::Fails;
    } else if (report.regularity.overall == Verdict3::Unknown) {
        report.overall = Verdict3::Unknown;
    } else {
        report.overall = Verdict3::Holds;
    }
    return report;
}

}  // namespace

EquivalenceReport verify_nerve_theorem(const Cover& F, const std::string& cover_id) {
    if (F.kind() != CoverKind::Closed) {
        throw MalformedInput("verify_nerve_theorem needs a closed cover");
    }
    return run_pipeline(F, cover_id, std::nullopt);
}

EquivalenceReport verify_n_nerve_theorem(const Cover& F, int n, const std::string& cover_id) {
    if (n < 1) throw MalformedInput("verify_n_nerve_theorem needs n >= 1");
    if (F.kind() != CoverKind::Closed) {
        throw MalformedInput("verify_n_nerve_theorem needs a closed cover");
    }
    return run_pipeline(F, cover_id, n);
}

}  // namespace nervelab
