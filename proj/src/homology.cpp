#include "nervelab/homology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace nervelab {

long long HomologyProfile::betti_at(int degree) const {
    const int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
    return betti[i];
}

std::vector<Int> HomologyProfile::torsion_at(int degree) const {
    const int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(torsion.size())) return {};
    return torsion[i];
}

bool HomologyProfile::trivial() const {
    for (auto b : betti) {
        if (b != 0) return false;
    }
    for (const auto& t : torsion) {
        if (!t.empty()) return false;
    }
    return true;
}

bool HomologyProfile::operator==(const HomologyProfile& other) const {
    const int lo = std::min(min_degree, other.min_degree);
    const int hi = std::max(top_degree(), other.top_degree());
    for (int k = lo; k <= hi; ++k) {
        if (betti_at(k) != other.betti_at(k)) return false;
        if (torsion_at(k) != other.torsion_at(k)) return false;
    }
    return true;
}

HomologyProfile homology(const ChainComplex& C) {
    HomologyProfile H;
    H.min_degree = C.min_degree;
    const int top = C.top_degree();
    if (top < C.min_degree) return H;

    // rank and invariant factors of each boundary matrix
    std::map<int, std::vector<Int>> factors;
    for (int k = C.min_degree; k <= top; ++k) {
        const IntegerMatrix& B = C.boundary_at(k);
        if (B.rows() == 0 || B.cols() == 0) {
            factors[k] = {};
        } else {
            factors[k] = invariant_factors(B);
        }
    }
    for (int k = C.min_degree; k <= top; ++k) {
        const long long n = static_cast<long long>(C.rank_at(k));
        const long long rk = static_cast<long long>(factors[k].size());
        const long long rk1 = (k + 1 <= top) ? static_cast<long long>(factors[k + 1].size()) : 0;
        H.betti.push_back(n - rk - rk1);
        std::vector<Int> tor;
        if (k + 1 <= top) {
            for (const auto& f : factors[k + 1]) {
                if (f > 1) tor.push_back(f);
            }
        }
        std::sort(tor.begin(), tor.end());
        H.torsion.push_back(std::move(tor));
    }
    return H;
}

HomologyProfile homology(const SimplicialComplex& K, bool reduced) {
    ChainComplex C = chain_complex(K);
    if (reduced) {
        if (K.empty()) {
            // The augmented complex of the empty space has one generator in
            // degree -1 and nothing else.
            HomologyProfile H;
            H.min_degree = -1;
            H.betti = {1};
            H.torsion = {{}};
            return H;
        }
        C = augment(C);
    }
    return homology(C);
}

YesNo is_quasi_iso(const ChainMap& f, std::optional<int> degree_bound) {
    const HomologyProfile H = homology(mapping_cone(f));
    const int hi = degree_bound ? std::min(*degree_bound, H.top_degree()) : H.top_degree();
    for (int k = 0; k <= hi; ++k) {
        if (H.betti_at(k) != 0 || !H.torsion_at(k).empty()) return YesNo::No;
    }
    return YesNo::Yes;
}

std::size_t component_count(const SimplicialComplex& K) {
    const auto& vs = K.vertices();
    std::map<Vertex, std::size_t> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = i;
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : K.faces_of_dim(1)) {
        parent[find(idx[e[0]])] = find(idx[e[1]]);
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < vs.size(); ++i) roots.insert(find(i));
    return roots.size();
}

namespace {

// Generators are identified by positive ids; a letter -g means the inverse.
using Word = std::vector<int>;

void free_reduce(Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    }
    // cyclic reduction
    while (out.size() >= 2 && out.front() == -out.back()) {
        out.erase(out.begin());
        out.pop_back();
    }
    w = std::move(out);
}

void substitute(Word& w, int gen, const Word& repl) {
    Word out;
    for (int x : w) {
        if (x == gen) {
            out.insert(out.end(), repl.begin(), repl.end());
        } else if (x == -gen) {
            for (auto it = repl.rbegin(); it != repl.rend(); ++it) out.push_back(-*it);
        } else {
            out.push_back(x);
        }
    }
    w = std::move(out);
}

}  // namespace

bool edge_path_group_trivializes(const SimplicialComplex& K, std::size_t budget) {
    if (K.empty() || component_count(K) != 1) return false;

    // Deterministic BFS spanning tree of the 1-skeleton.
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& e : K.faces_of_dim(1)) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    std::set<std::pair<Vertex, Vertex>> tree;
    {
        std::set<Vertex> seen;
        std::vector<Vertex> queue{K.vertices().front()};
        seen.insert(queue.front());
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const Vertex v = queue[qi];
            for (const auto& w : adj[v]) {
                if (seen.insert(w).second) {
                    tree.insert({std::min(v, w), std::max(v, w)});
                    queue.push_back(w);
                }
            }
        }
    }

    // Generators: non-tree edges, in lexicographic edge order.
    std::map<std::pair<Vertex, Vertex>, int> gen_id;
    int next_id = 1;
    for (const auto& e : K.faces_of_dim(1)) {
        std::pair<Vertex, Vertex> key{e[0], e[1]};
        if (!tree.count(key)) gen_id[key] = next_id++;
    }
    if (gen_id.empty()) return true;

    auto letter = [&](const Vertex& a, const Vertex& b) -> Word {
        // the edge-path letter for traversing a -> b
        std::pair<Vertex, Vertex> key{std::min(a, b), std::max(a, b)};
        auto it = gen_id.find(key);
        if (it == gen_id.end()) return {};  // tree edge, trivial letter
        return {(a < b) ? it->second : -it->second};
    };

    // Relators: one per triangle, a.b.c^-1 around {v0 < v1 < v2}.
    std::vector<Word> relators;
    for (const auto& t : K.faces_of_dim(2)) {
        Word w;
        for (int x : letter(t[0], t[1])) w.push_back(x);
        for (int x : letter(t[1], t[2])) w.push_back(x);
        for (int x : letter(t[2], t[0])) w.push_back(x);
        free_reduce(w);
        if (!w.empty()) relators.push_back(std::move(w));
    }

    std::set<int> gens;
    for (int g = 1; g < next_id; ++g) gens.insert(g);

    std::size_t steps = 0;
    while (!gens.empty()) {
        if (steps >= budget) return false;
        // Find the shortest relator in which some generator occurs exactly
        // once; eliminate that generator by substitution.
        int best_rel = -1, best_gen = 0;
        for (std::size_t r = 0; r < relators.size(); ++r) {
            std::map<int, int> count;
            for (int x : relators[r]) count[std::abs(x)]++;
            for (const auto& [g, c] : count) {
                if (c == 1 && gens.count(g)) {
                    if (best_rel < 0 || relators[r].size() < relators[best_rel].size() ||
                        (relators[r].size() == relators[best_rel].size() && g < best_gen)) {
                        best_rel = static_cast<int>(r);
                        best_gen = g;
                    }
                }
            }
        }
        if (best_rel < 0) return false;

        // Solve relator = 1 for best_gen: rotate so the word is g . w, then
        // g = w^-1.
        Word rel = relators[best_rel];
        std::size_t pos = 0;
        while (std::abs(rel[pos]) != best_gen) ++pos;
        std::rotate(rel.begin(), rel.begin() + pos, rel.end());
        Word repl;
        if (rel[0] == best_gen) {
            for (auto it = rel.rbegin(); it != rel.rend() - 1; ++it) repl.push_back(-*it);
        } else {
            repl.assign(rel.begin() + 1, rel.end());
        }
        relators.erase(relators.begin() + best_rel);
        std::vector<Word> next;
        for (auto& w : relators) {
            substitute(w, best_gen, repl);
            free_reduce(w);
            ++steps;
            if (!w.empty()) next.push_back(std::move(w));
        }
        relators = std::move(next);
        gens.erase(best_gen);
        ++steps;
    }
    return true;
}

ConnVerdict connectivity_certificate(const SimplicialComplex& K, int k) {
    if (k <= -2) return ConnVerdict::Connected;
    if (k == -1) return K.empty() ? ConnVerdict::NotConnected : ConnVerdict::Connected;
    if (K.empty()) return ConnVerdict::NotConnected;
    if (k == 0) {
        return component_count(K) == 1 ? ConnVerdict::Connected : ConnVerdict::NotConnected;
    }

    const HomologyProfile H = homology(K, /*reduced=*/true);
    for (int d = 0; d <= k; ++d) {
        if (H.betti_at(d) != 0 || !H.torsion_at(d).empty()) return ConnVerdict::NotConnected;
    }
    // Reduced homology vanishes through degree k; certify 1-connectivity.
    if (is_cone(K)) return ConnVerdict::Connected;
    if (collapse_to_point(K, 10000) == CollapseVerdict::Collapsible) {
        return ConnVerdict::Connected;
    }
    if (edge_path_group_trivializes(K)) return ConnVerdict::Connected;
    return ConnVerdict::Unknown;
}

}  // namespace nervelab
