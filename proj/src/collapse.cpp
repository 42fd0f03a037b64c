#include "nervelab/collapse.hpp"

#include <algorithm>

namespace nervelab {

std::optional<Vertex> is_cone(const SimplicialComplex& K) {
    if (K.empty()) return std::nullopt;
    // An apex must lie in every facet; conversely a common vertex of all
    // facets cones every face inside the facet containing it.
    Simplex common = K.facets().front();
    for (const auto& f : K.facets()) {
        Simplex next;
        std::set_intersection(common.begin(), common.end(), f.begin(), f.end(),
                              std::back_inserter(next));
        common = std::move(next);
        if (common.empty()) return std::nullopt;
    }
    return common.front();
}

namespace {

// Enumerates nonempty proper subsets of s into out.
void proper_subfaces(const Simplex& s, std::vector<Simplex>& out) {
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
        Simplex sub;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) sub.push_back(s[i]);
        }
        out.push_back(std::move(sub));
    }
}

}  // namespace

CollapseVerdict collapse_to_point(const SimplicialComplex& K, std::size_t step_budget) {
    if (K.empty()) throw MalformedInput("collapse_to_point on the empty complex");
    if (step_budget == 0) throw MalformedInput("collapse budget must be positive");

    FaceSet live = K.faces();
    // coface_count[s] = number of live faces properly containing s.
    std::map<Simplex, std::size_t> coface_count;
    std::vector<Simplex> subs;
    for (const auto& s : live) {
        subs.clear();
        proper_subfaces(s, subs);
        for (auto& t : subs) coface_count[t]++;
    }

    auto remove_face = [&](const Simplex& s) {
        live.erase(s);
        subs.clear();
        proper_subfaces(s, subs);
        for (auto& t : subs) coface_count[t]--;
    };

    for (std::size_t step = 0; step < step_budget; ++step) {
        if (live.size() == 1 && live.begin()->size() == 1) {
            return CollapseVerdict::Collapsible;
        }
        // First free face in dimension-then-lexicographic order.  A face
        // with exactly one proper coface is covered by it, and that coface
        // is maximal.
        const Simplex* free_face = nullptr;
        for (const auto& s : live) {
            if (coface_count[s] == 1) {
                free_face = &s;
                break;
            }
        }
        if (!free_face) return CollapseVerdict::Unknown;

        Simplex sigma = *free_face;
        // Locate the unique live coface.
        Simplex tau;
        for (const auto& t : live) {
            if (t.size() > sigma.size() && is_subface(sigma, t)) {
                tau = t;
                break;
            }
        }
        remove_face(tau);
        remove_face(sigma);
    }
    return (live.size() == 1 && live.begin()->size() == 1)
               ? CollapseVerdict::Collapsible
               : CollapseVerdict::Unknown;
}

namespace {

// Per-vertex invariant: counts of incident faces by dimension.
std::map<Vertex, std::vector<std::size_t>> vertex_signatures(const SimplicialComplex& K) {
    std::map<Vertex, std::vector<std::size_t>> sig;
    const std::size_t d = static_cast<std::size_t>(K.dim() + 1);
    for (const auto& v : K.vertices()) sig[v].assign(d, 0);
    for (const auto& s : K.faces()) {
        for (const auto& v : s) sig[v][s.size() - 1]++;
    }
    return sig;
}

struct IsoSearch {
    const SimplicialComplex& K1;
    const SimplicialComplex& K2;
    std::vector<Vertex> src;
    std::map<Vertex, std::vector<Vertex>> candidates;
    std::map<Vertex, Vertex> assign;
    std::set<Vertex> used;

    bool edges_consistent(const Vertex& v, const Vertex& w) const {
        for (const auto& [u, x] : assign) {
            const bool e1 = K1.has_face(make_simplex({u, v}));
            const bool e2 = K2.has_face(make_simplex({x, w}));
            if (e1 != e2) return false;
        }
        return true;
    }

    bool full_check() const {
        for (const auto& s : K1.faces()) {
            Simplex img;
            for (const auto& v : s) img.push_back(assign.at(v));
            std::sort(img.begin(), img.end());
            if (!K2.has_face(img)) return false;
        }
        return true;
    }

    bool search(std::size_t i) {
        if (i == src.size()) return full_check();
        const Vertex& v = src[i];
        for (const auto& w : candidates.at(v)) {
            if (used.count(w)) continue;
            if (!edges_consistent(v, w)) continue;
            assign[v] = w;
            used.insert(w);
            if (search(i + 1)) return true;
            assign.erase(v);
            used.erase(w);
        }
        return false;
    }
};

}  // namespace

std::optional<std::map<Vertex, Vertex>> complexes_isomorphic(
    const SimplicialComplex& K1, const SimplicialComplex& K2, std::size_t vertex_cap) {
    if (K1.vertices().size() > vertex_cap || K2.vertices().size() > vertex_cap) {
        throw ResourceLimit("isomorphism search capped at " + std::to_string(vertex_cap) +
                            " vertices");
    }
    if (K1.vertices().size() != K2.vertices().size()) return std::nullopt;
    if (K1.f_vector() != K2.f_vector()) return std::nullopt;
    if (K1.empty() && K2.empty()) return std::map<Vertex, Vertex>{};

    auto sig1 = vertex_signatures(K1);
    auto sig2 = vertex_signatures(K2);

    IsoSearch s{K1, K2, {}, {}, {}, {}};
    s.src = K1.vertices();
    for (const auto& v : s.src) {
        auto& cand = s.candidates[v];
        for (const auto& w : K2.vertices()) {
            if (sig1.at(v) == sig2.at(w)) cand.push_back(w);
        }
        if (cand.empty()) return std::nullopt;
    }
    // Most-constrained vertices first keeps the branching factor down.
    std::stable_sort(s.src.begin(), s.src.end(), [&](const Vertex& a, const Vertex& b) {
        return s.candidates.at(a).size() < s.candidates.at(b).size();
    });
    if (s.search(0)) return s.assign;
    return std::nullopt;
}

}  // namespace nervelab
