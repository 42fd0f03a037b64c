#include "nervelab/gallery.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace nervelab {
namespace gallery {

namespace {

Vertex vlabel(int i) {
    // zero-padded labels keep lexicographic and numeric order aligned
    std::string s = std::to_string(i);
    while (s.size() < 2) s = "0" + s;
    return "v" + s;
}

SimplicialComplex torus7() {
    // Vertex-transitive 7-vertex torus: triangles {i, i+1, i+3} and
    // {i, i+2, i+3} mod 7.
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        facets.push_back(make_simplex({vlabel(i), vlabel((i + 1) % 7), vlabel((i + 3) % 7)}));
        facets.push_back(make_simplex({vlabel(i), vlabel((i + 2) % 7), vlabel((i + 3) % 7)}));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex rp2_6() {
    // Antipodal icosahedron quotient on 6 vertices, 10 triangles.
    const std::vector<std::vector<int>> tris = {
        {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
        {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    std::vector<Simplex> facets;
    for (const auto& t : tris) {
        facets.push_back(make_simplex({vlabel(t[0]), vlabel(t[1]), vlabel(t[2])}));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

// Closed arc of the 12-gon from vertex a to vertex b (inclusive, forward).
SimplicialComplex cycle12_arc(int a, int b) {
    std::vector<Simplex> facets;
    for (int i = a; i % 12 != b % 12; ++i) {
        facets.push_back(make_simplex({vlabel(i % 12), vlabel((i + 1) % 12)}));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<std::pair<unsigned, int>> random_params() {
    // (seed, vertex count) for the ten seeded suite instances
    std::vector<std::pair<unsigned, int>> out;
    for (unsigned i = 0; i < 10; ++i) {
        out.push_back({1000 + i, 5 + static_cast<int>(i % 4)});
    }
    return out;
}

}  // namespace

SimplicialComplex bd_delta(int n) {
    if (n < 1) throw MalformedInput("bd_delta needs n >= 1");
    std::vector<Simplex> facets;
    for (int omit = 0; omit <= n; ++omit) {
        Simplex f;
        for (int i = 0; i <= n; ++i) {
            if (i != omit) f.push_back(vlabel(i));
        }
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cycle(int m) {
    if (m < 3) throw MalformedInput("cycle needs m >= 3");
    std::vector<Simplex> facets;
    for (int i = 0; i < m; ++i) {
        facets.push_back(make_simplex({vlabel(i), vlabel((i + 1) % m)}));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex random_complex(unsigned seed, int vertices, double edge_probability) {
    std::mt19937 gen(seed);
    const auto threshold = static_cast<std::uint64_t>(edge_probability * 4294967296.0);
    std::vector<std::vector<bool>> adj(vertices, std::vector<bool>(vertices, false));
    for (int i = 0; i < vertices; ++i) {
        for (int j = i + 1; j < vertices; ++j) {
            // raw engine draws keep the construction bit-stable across platforms
            adj[i][j] = adj[j][i] = (static_cast<std::uint64_t>(gen()) < threshold);
        }
    }
    // Facets are the maximal cliques; the 3-skeleton keeps subdivisions small.
    std::vector<Simplex> cliques;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int start) {
        bool maximal = true;
        for (int w = 0; w < vertices; ++w) {
            const bool compatible = std::all_of(current.begin(), current.end(),
                                                [&](int u) { return adj[u][w]; });
            if (compatible && std::find(current.begin(), current.end(), w) == current.end()) {
                maximal = false;
                if (w >= start) {
                    current.push_back(w);
                    extend(w + 1);
                    current.pop_back();
                }
            }
        }
        if (maximal && !current.empty()) {
            Simplex s;
            for (int u : current) s.push_back(vlabel(u));
            cliques.push_back(make_simplex(std::move(s)));
        }
    };
    extend(0);
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(cliques));
    if (K.dim() > 3) K = skeleton(K, 3);
    return K;
}

Cover random_subcomplex_cover(unsigned seed, int pieces) {
    if (pieces < 1) throw MalformedInput("random_subcomplex_cover needs pieces >= 1");
    std::mt19937 gen(seed);
    SimplicialComplex base = random_complex(gen(), 6, 0.6);
    const auto& facets = base.facets();
    const int k = std::min<int>(pieces, static_cast<int>(facets.size()));

    std::map<PieceName, std::vector<Simplex>> assigned;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        // round-robin base assignment plus a random extra holder
        assigned["p" + std::to_string(i % k)].push_back(facets[i]);
        const int extra = static_cast<int>(gen() % k);
        assigned["p" + std::to_string(extra)].push_back(facets[i]);
    }
    std::map<PieceName, SimplicialComplex> subs;
    for (auto& [name, gen_facets] : assigned) {
        subs[name] = SimplicialComplex::from_facets(std::move(gen_facets));
    }
    return Cover::closed(std::move(base), std::move(subs));
}

SimplicialComplex make_complex(const std::string& id) {
    if (id == "bd_delta2") return bd_delta(2);
    if (id == "bd_delta3") return bd_delta(3);
    if (id == "cycle6") return cycle(6);
    if (id == "cycle12") return cycle(12);
    if (id == "torus7") return torus7();
    if (id == "rp2_6") return rp2_6();
    if (id.rfind("bd_delta", 0) == 0) return bd_delta(std::stoi(id.substr(8)));
    if (id.rfind("cycle", 0) == 0) return cycle(std::stoi(id.substr(5)));
    if (id.rfind("random_", 0) == 0) {
        const int i = std::stoi(id.substr(7));
        if (i < 0 || i >= 10) throw MalformedInput("unknown instance '" + id + "'");
        const auto params = random_params()[i];
        return random_complex(params.first, params.second, 0.55);
    }
    throw MalformedInput("unknown instance '" + id + "'");
}

Cover make_cover(const std::string& id) {
    if (id == "two_arcs") {
        std::map<PieceName, SimplicialComplex> pieces;
        pieces["arc0"] = cycle12_arc(0, 6);
        pieces["arc1"] = cycle12_arc(6, 12);
        return Cover::closed(cycle(12), std::move(pieces));
    }
    if (id == "three_arcs") {
        std::map<PieceName, SimplicialComplex> pieces;
        pieces["arcA"] = cycle12_arc(0, 4);
        pieces["arcB"] = cycle12_arc(4, 8);
        pieces["arcC"] = cycle12_arc(8, 12);
        return Cover::closed(cycle(12), std::move(pieces));
    }
    if (id == "face_cover_bd_delta3") {
        SimplicialComplex base = bd_delta(3);
        std::map<PieceName, SimplicialComplex> pieces;
        for (const auto& f : base.facets()) {
            std::string name = "tri";
            for (const auto& v : f) name += "_" + v;
            pieces[name] = SimplicialComplex::from_facets({f});
        }
        return Cover::closed(std::move(base), std::move(pieces));
    }
    if (id.rfind("open_stars:", 0) == 0) {
        return open_star_cover(make_complex(id.substr(11)));
    }
    if (id.rfind("bary_stars:", 0) == 0) {
        return barycentric_star_cover(make_complex(id.substr(11)));
    }
    if (id.rfind("random_cover_", 0) == 0) {
        const unsigned i = static_cast<unsigned>(std::stoul(id.substr(13)));
        return random_subcomplex_cover(2000 + i, 2 + static_cast<int>(i % 5));
    }
    throw MalformedInput("unknown cover '" + id + "'");
}

bool is_complex_id(const std::string& id) {
    try {
        make_complex(id);
        return true;
    } catch (const MalformedInput&) {
        return false;
    }
}

bool is_cover_id(const std::string& id) {
    try {
        make_cover(id);
        return true;
    } catch (const MalformedInput&) {
        return false;
    }
}

std::vector<std::string> suite() {
    std::vector<std::string> ids = {"bd_delta2", "bd_delta3", "cycle6",
                                    "cycle12",   "torus7",    "rp2_6"};
    for (int i = 0; i < 10; ++i) ids.push_back("random_" + std::to_string(i));
    return ids;
}

std::vector<std::string> suite_covers() {
    std::vector<std::string> ids = {"two_arcs", "three_arcs", "face_cover_bd_delta3"};
    for (const auto& k : suite()) ids.push_back("bary_stars:" + k);
    return ids;
}

}  // namespace gallery
}  // namespace nervelab
