#include "nervelab/json_io.hpp"

namespace nervelab {

namespace {

Json simplex_to_json(const Simplex& s) {
    Json out = Json::array();
    for (const auto& v : s) out.push_back(v);
    return out;
}

Simplex simplex_from_json(const Json& j) {
    if (!j.is_array()) throw MalformedInput("simplex must be an array of labels");
    std::vector<Vertex> vs;
    for (const auto& v : j) {
        if (!v.is_string()) throw MalformedInput("vertex labels must be strings");
        vs.push_back(v.get<std::string>());
    }
    return make_simplex(std::move(vs));
}

std::string face_key(const Simplex& s) {
    std::string out;
    for (const auto& v : s) out += (out.empty() ? "" : "|") + v;
    return out;
}

Json resolve(const Json& j, const std::function<Json(const std::string&)>& load_path) {
    if (j.is_string()) {
        if (!load_path) throw MalformedInput("no loader supplied for path reference");
        return load_path(j.get<std::string>());
    }
    return j;
}

std::string yesno_name(YesNo v) { return v == YesNo::Yes ? "yes" : "no"; }

}  // namespace

std::string verdict_name(Verdict3 v) {
    switch (v) {
        case Verdict3::Holds: return "holds";
        case Verdict3::Fails: return "fails";
        default: return "unknown";
    }
}

std::string conn_name(ConnVerdict v) {
    switch (v) {
        case ConnVerdict::Connected: return "connected";
        case ConnVerdict::NotConnected: return "not-connected";
        default: return "unknown";
    }
}

Json complex_to_json(const SimplicialComplex& K) {
    Json out;
    Json verts = Json::array();
    for (const auto& v : K.vertices()) verts.push_back(v);
    Json facets = Json::array();
    for (const auto& f : K.facets()) facets.push_back(simplex_to_json(f));
    out["vertices"] = std::move(verts);
    out["facets"] = std::move(facets);
    return out;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets")) {
        throw MalformedInput("complex must be an object with a 'facets' array");
    }
    if (!j["facets"].is_array()) throw MalformedInput("'facets' must be an array");
    std::vector<Simplex> facets;
    for (const auto& f : j["facets"]) facets.push_back(simplex_from_json(f));
    SimplicialComplex K = SimplicialComplex::from_facets(std::move(facets));
    if (j.contains("vertices")) {
        // isolated vertices are not representable as facets of lower faces,
        // so a listed vertex absent from every facet is a facet of its own
        if (!j["vertices"].is_array()) throw MalformedInput("'vertices' must be an array");
        std::vector<Simplex> extended(K.facets());
        bool grew = false;
        for (const auto& v : j["vertices"]) {
            if (!v.is_string()) throw MalformedInput("vertex labels must be strings");
            const Vertex label = v.get<std::string>();
            if (!K.has_vertex(label)) {
                extended.push_back({label});
                grew = true;
            }
        }
        if (grew) K = SimplicialComplex::from_facets(std::move(extended));
    }
    return K;
}

Json cover_to_json(const Cover& cover) {
    Json out;
    out["complex"] = complex_to_json(cover.base());
    out["kind"] = cover.kind() == CoverKind::Closed ? "closed" : "open-stars";
    Json pieces = Json::object();
    for (const auto& name : cover.names()) {
        const Piece& p = cover.piece(name);
        Json entry;
        if (cover.kind() == CoverKind::OpenStars) {
            entry["center"] = *p.center;
        } else {
            Json facets = Json::array();
            const SimplicialComplex piece_complex = complex_from_face_set(p.members);
            for (const auto& f : piece_complex.facets()) {
                facets.push_back(simplex_to_json(f));
            }
            entry["facets"] = std::move(facets);
        }
        pieces[name] = std::move(entry);
    }
    out["pieces"] = std::move(pieces);
    return out;
}

Cover cover_from_json(const Json& j,
                      const std::function<Json(const std::string&)>& load_path) {
    if (!j.is_object() || !j.contains("complex") || !j.contains("pieces")) {
        throw MalformedInput("cover must be an object with 'complex' and 'pieces'");
    }
    SimplicialComplex base = complex_from_json(resolve(j["complex"], load_path));
    const std::string kind = j.value("kind", std::string("closed"));
    if (!j["pieces"].is_object()) throw MalformedInput("'pieces' must be an object");

    if (kind == "open-stars") {
        std::vector<Vertex> centers;
        for (const auto& [name, entry] : j["pieces"].items()) {
            if (!entry.is_object() || !entry.contains("center") || !entry["center"].is_string()) {
                throw MalformedInput("open-star piece '" + name + "' needs a 'center' label");
            }
            const Vertex c = entry["center"].get<std::string>();
            if (c != name) {
                throw MalformedInput("open-star piece '" + name + "' must be named by its center");
            }
            centers.push_back(c);
        }
        return Cover::open_stars(std::move(base), std::move(centers));
    }
    if (kind != "closed") throw MalformedInput("unknown cover kind '" + kind + "'");

    std::map<PieceName, SimplicialComplex> pieces;
    for (const auto& [name, entry] : j["pieces"].items()) {
        if (!entry.is_object() || !entry.contains("facets")) {
            throw MalformedInput("closed piece '" + name + "' needs a 'facets' array");
        }
        pieces[name] = complex_from_json(entry);
    }
    return Cover::closed(std::move(base), std::move(pieces));
}

Json carrier_to_json(const Carrier& C) {
    Json out;
    out["domain"] = cover_to_json(C.domain);
    out["codomain"] = cover_to_json(C.codomain);
    Json assignment = Json::object();
    for (const auto& [from, to] : C.assignment) assignment[from] = to;
    out["assignment"] = std::move(assignment);
    return out;
}

Carrier carrier_from_json(const Json& j,
                          const std::function<Json(const std::string&)>& load_path) {
    if (!j.is_object() || !j.contains("domain") || !j.contains("codomain") ||
        !j.contains("assignment")) {
        throw MalformedInput("carrier must have 'domain', 'codomain', 'assignment'");
    }
    Cover domain = cover_from_json(resolve(j["domain"], load_path), load_path);
    Cover codomain = cover_from_json(resolve(j["codomain"], load_path), load_path);
    if (!j["assignment"].is_object()) throw MalformedInput("'assignment' must be an object");
    std::map<PieceName, PieceName> assignment;
    for (const auto& [from, to] : j["assignment"].items()) {
        if (!to.is_string()) throw MalformedInput("assignment values must be piece names");
        assignment[from] = to.get<std::string>();
    }
    return make_carrier(std::move(domain), std::move(codomain), std::move(assignment));
}

Json map_to_json(const SimplicialMap& f) {
    Json out;
    out["source"] = complex_to_json(f.source);
    out["target"] = complex_to_json(f.target);
    Json vm = Json::object();
    for (const auto& [v, w] : f.vertex_map) vm[v] = w;
    out["vertex_map"] = std::move(vm);
    return out;
}

SimplicialMap map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("vertex_map")) {
        throw MalformedInput("map must have 'source', 'target', 'vertex_map'");
    }
    SimplicialComplex source = complex_from_json(j["source"]);
    SimplicialComplex target = complex_from_json(j["target"]);
    if (!j["vertex_map"].is_object()) throw MalformedInput("'vertex_map' must be an object");
    std::map<Vertex, Vertex> vm;
    for (const auto& [v, w] : j["vertex_map"].items()) {
        if (!w.is_string()) throw MalformedInput("vertex images must be labels");
        vm[v] = w.get<std::string>();
    }
    return make_simplicial_map(std::move(source), std::move(target), std::move(vm));
}

Json nerve_to_json(const Nerve& N) {
    Json out;
    out["complex"] = complex_to_json(N.complex);
    Json witnesses = Json::object();
    for (const auto& [face, member] : N.witnesses) {
        witnesses[face_key(face)] = simplex_to_json(member);
    }
    out["witnesses"] = std::move(witnesses);
    if (N.dimension_cap) out["dimension_cap"] = *N.dimension_cap;
    return out;
}

Json homology_to_json(const HomologyProfile& H) {
    Json groups = Json::array();
    for (std::size_t i = 0; i < H.betti.size(); ++i) {
        Json g;
        g["degree"] = H.min_degree + static_cast<int>(i);
        g["betti"] = H.betti[i];
        Json torsion = Json::array();
        if (i < H.torsion.size()) {
            for (const auto& t : H.torsion[i]) torsion.push_back(t.str());
        }
        g["torsion"] = std::move(torsion);
        groups.push_back(std::move(g));
    }
    Json out;
    out["min_degree"] = H.min_degree;
    out["groups"] = std::move(groups);
    return out;
}

Json regularity_to_json(const RegularityReport& R) {
    Json out;
    switch (R.mode) {
        case RegularityMode::Regular: out["mode"] = "regular"; break;
        case RegularityMode::WeaklyRegular: out["mode"] = "weakly-regular"; break;
        case RegularityMode::NRegular: out["mode"] = "n-regular"; break;
    }
    if (R.n) out["n"] = *R.n;
    out["overall"] = verdict_name(R.overall);
    Json entries = Json::array();
    for (const auto& e : R.entries) {
        Json entry;
        Json coll = Json::array();
        for (const auto& name : e.collection) coll.push_back(name);
        entry["collection"] = std::move(coll);
        entry["verdict"] = verdict_name(e.verdict);
        entry["certificate"] = e.certificate;
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    out["proxy_note"] = R.proxy_note;
    return out;
}

Json equivalence_to_json(const EquivalenceReport& R) {
    Json out;
    out["cover_id"] = R.cover_id;
    out["overall"] = verdict_name(R.overall);
    out["regularity"] = regularity_to_json(R.regularity);
    out["base_homology"] = homology_to_json(R.base_profile);
    out["nerve_homology"] = homology_to_json(R.nerve_profile);
    out["quasi_iso"] = yesno_name(R.quasi_iso);
    if (R.degree_bound) out["degree_bound"] = *R.degree_bound;
    if (R.base_one_connectivity) {
        out["base_one_connectivity"] = conn_name(*R.base_one_connectivity);
    }
    if (R.nerve_one_connectivity) {
        out["nerve_one_connectivity"] = conn_name(*R.nerve_one_connectivity);
    }
    Json notes = Json::array();
    for (const auto& n : R.proxy_notes) notes.push_back(n);
    out["proxy_notes"] = std::move(notes);
    return out;
}

}  // namespace nervelab
