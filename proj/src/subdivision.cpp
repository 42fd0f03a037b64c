#include "nervelab/subdivision.hpp"

#include <algorithm>
#include <functional>

namespace nervelab {

Vertex barycenter_label(const Simplex& face) {
    const int d = static_cast<int>(face.size()) - 1;
    if (d > 9) throw ResourceLimit("barycenter labels support dimension <= 9");
    Vertex out = "(" + std::to_string(d) + ":";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += "+";
        out += face[i];
    }
    out += ")";
    return out;
}

Simplex face_of_barycenter(const Vertex& label) {
    if (label.size() < 5 || label.front() != '(' || label.back() != ')') {
        throw MalformedInput("not a barycenter label: " + label);
    }
    const auto colon = label.find(':');
    if (colon == std::string::npos) throw MalformedInput("not a barycenter label: " + label);
    Simplex face;
    std::string cur;
    int depth = 0;
    for (std::size_t i = colon + 1; i + 1 < label.size(); ++i) {
        const char c = label[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            face.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    face.push_back(cur);
    return make_simplex(std::move(face));
}

OpenStarSet open_star(const SimplicialComplex& K, const Vertex& v) {
    if (!K.has_vertex(v)) throw MalformedInput("unknown vertex '" + v + "'");
    OpenStarSet st;
    st.center = v;
    for (const auto& s : K.faces()) {
        if (std::binary_search(s.begin(), s.end(), v)) st.members.insert(s);
    }
    return st;
}

FaceSet chain_faces(const FaceSet& members) {
    std::vector<Simplex> elems(members.begin(), members.end());
    const std::size_t n = elems.size();

    // supersets[i] = indices of members properly containing elems[i].
    std::vector<std::vector<std::size_t>> supersets(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (elems[i].size() < elems[j].size() && is_subface(elems[i], elems[j])) {
                supersets[i].push_back(j);
            }
        }
    }

    FaceSet chains;
    Simplex current;
    std::function<void(std::size_t)> extend = [&](std::size_t i) {
        current.push_back(barycenter_label(elems[i]));
        chains.insert(make_simplex(current));
        for (std::size_t j : supersets[i]) extend(j);
        current.pop_back();
    };
    for (std::size_t i = 0; i < n; ++i) extend(i);
    return chains;
}

SimplicialComplex order_complex(const FaceSet& members) {
    return complex_from_face_set(chain_faces(members));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
    return order_complex(K.faces());
}

SimplicialComplex barycentric_star(const SimplicialComplex& K, const Vertex& v) {
    if (!K.has_vertex(v)) throw MalformedInput("unknown vertex '" + v + "'");
    // Flags whose minimal face contains v; the member set of st v is upward
    // closed, so its order complex is a subcomplex of sd(K).
    return order_complex(open_star(K, v).members);
}

}  // namespace nervelab
