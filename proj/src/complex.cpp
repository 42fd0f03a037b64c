#include "nervelab/complex.hpp"

#include <algorithm>
#include <map>

namespace nervelab {

Simplex make_simplex(std::vector<Vertex> vertices) {
    if (vertices.empty()) throw MalformedInput("simplex must be nonempty");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i] == vertices[i - 1]) {
            throw MalformedInput("repeated vertex '" + vertices[i] + "' in simplex");
        }
    }
    return vertices;
}

Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subface(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
    SimplicialComplex K;
    for (auto& f : facets) f = make_simplex(std::move(f));
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

    // Drop non-maximal facets.
    for (const auto& f : facets) {
        bool maximal = true;
        for (const auto& g : facets) {
            if (&f != &g && f != g && is_subface(f, g)) {
                maximal = false;
                break;
            }
        }
        if (maximal) K.facets_.push_back(f);
    }

    std::set<Vertex> vs;
    for (const auto& f : K.facets_) {
        vs.insert(f.begin(), f.end());
        // Enumerate every nonempty subset of the facet.
        const std::size_t n = f.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) face.push_back(f[i]);
            }
            K.faces_.insert(std::move(face));
        }
    }
    K.vertices_.assign(vs.begin(), vs.end());
    return K;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max<int>(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::has_vertex(const Vertex& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int k) const {
    std::vector<Simplex> out;
    if (k < 0) return out;
    for (const auto& s : faces_) {
        if (static_cast<int>(s.size()) - 1 == k) out.push_back(s);
        else if (static_cast<int>(s.size()) - 1 > k) break;
    }
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (const auto& s : faces_) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> fv(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& s : faces_) fv[s.size() - 1]++;
    return fv;
}

SimplicialComplex skeleton(const SimplicialComplex& K, int n) {
    if (n < 0) throw MalformedInput("skeleton degree must be >= 0");
    std::vector<Simplex> gen;
    for (const auto& s : K.faces()) {
        if (static_cast<int>(s.size()) - 1 <= n) gen.push_back(s);
    }
    return SimplicialComplex::from_facets(std::move(gen));
}

SimplicialComplex complex_from_face_set(const FaceSet& faces) {
    std::vector<Simplex> gen(faces.begin(), faces.end());
    return SimplicialComplex::from_facets(std::move(gen));
}

}  // namespace nervelab
