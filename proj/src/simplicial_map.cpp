#include "nervelab/simplicial_map.hpp"

#include <algorithm>

namespace nervelab {

std::string simplicial_map_violation(const SimplicialComplex& source,
                                     const SimplicialComplex& target,
                                     const std::map<Vertex, Vertex>& vertex_map) {
    for (const auto& v : source.vertices()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end()) return "vertex map is not total: missing '" + v + "'";
        if (!target.has_vertex(it->second)) {
            return "image vertex '" + it->second + "' is not in the target";
        }
    }
    for (const auto& f : source.facets()) {
        Simplex img;
        for (const auto& v : f) img.push_back(vertex_map.at(v));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!target.has_face(img)) {
            std::string s;
            for (const auto& v : f) s += (s.empty() ? "" : ",") + v;
            return "image of facet {" + s + "} does not span a face of the target";
        }
    }
    return {};
}

SimplicialMap make_simplicial_map(SimplicialComplex source, SimplicialComplex target,
                                  std::map<Vertex, Vertex> vertex_map) {
    if (auto why = simplicial_map_violation(source, target, vertex_map); !why.empty()) {
        throw MalformedInput("not a simplicial map: " + why);
    }
    return SimplicialMap{std::move(source), std::move(target), std::move(vertex_map)};
}

Simplex image_simplex(const SimplicialMap& f, const Simplex& s) {
    Simplex img;
    for (const auto& v : s) img.push_back(f(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

SimplicialMap identity_map(const SimplicialComplex& K) {
    std::map<Vertex, Vertex> vm;
    for (const auto& v : K.vertices()) vm[v] = v;
    return SimplicialMap{K, K, std::move(vm)};
}

SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.target != g.source) throw MalformedInput("compose_maps: complexes do not match");
    std::map<Vertex, Vertex> vm;
    for (const auto& [v, w] : f.vertex_map) vm[v] = g(w);
    return SimplicialMap{f.source, g.target, std::move(vm)};
}

}  // namespace nervelab
