#include <doctest.h>

#include <algorithm>
#include <random>

#include "nervelab/carrier.hpp"
#include "nervelab/gallery.hpp"

using namespace nervelab;

namespace {

Carrier identity_carrier(const Cover& F) {
    std::map<PieceName, PieceName> a;
    for (const auto& name : F.names()) a[name] = name;
    return make_carrier(F, F, std::move(a));
}

// brute-force validity: every subcollection with nonempty intersection must
// map to a subcollection with nonempty intersection
bool brute_force_valid(const Carrier& C) {
    const auto& names = C.domain.names();
    for (std::size_t mask = 1; mask < (1u << names.size()); ++mask) {
        std::vector<PieceName> A, B;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (mask & (1u << i)) {
                A.push_back(names[i]);
                B.push_back(C(names[i]));
            }
        }
        std::sort(B.begin(), B.end());
        B.erase(std::unique(B.begin(), B.end()), B.end());
        if (!intersection(C.domain, A).empty() && intersection(C.codomain, B).empty()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("validate_carrier") {
    const auto three = gallery::make_cover("three_arcs");
    CHECK(validate_carrier(identity_carrier(three)).valid);

    const auto two = gallery::make_cover("two_arcs");
    const auto mixed = make_carrier(
        three, two, {{"arcA", "arc0"}, {"arcB", "arc0"}, {"arcC", "arc1"}});
    CHECK(validate_carrier(mixed).valid);

    // constant assignment is always valid
    const auto constant = make_carrier(
        three, two, {{"arcA", "arc0"}, {"arcB", "arc0"}, {"arcC", "arc0"}});
    CHECK(validate_carrier(constant).valid);

    CHECK_THROWS_AS(make_carrier(three, two, {{"arcA", "arc0"}}), MalformedInput);
    CHECK_THROWS_AS(make_carrier(three, two,
                                 {{"arcA", "zzz"}, {"arcB", "arc0"}, {"arcC", "arc0"}}),
                    MalformedInput);
}

TEST_CASE("validity agrees with brute force and with the nerve-map criterion") {
    std::mt19937 gen(4242);
    int invalid_seen = 0;
    for (int i = 0; i < 40; ++i) {
        const auto domain = gallery::random_subcomplex_cover(gen(), 2 + i % 5);
        const auto codomain = gallery::random_subcomplex_cover(gen(), 2 + (i + 2) % 5);
        std::map<PieceName, PieceName> a;
        for (const auto& name : domain.names()) {
            a[name] = codomain.names()[gen() % codomain.size()];
        }
        const auto C = make_carrier(domain, codomain, std::move(a));
        const auto verdict = validate_carrier(C);
        CHECK(verdict.valid == brute_force_valid(C));
        if (!verdict.valid) {
            ++invalid_seen;
            CHECK(intersection(C.codomain, [&] {
                      std::vector<PieceName> B;
                      for (const auto& n : verdict.violating) B.push_back(C(n));
                      std::sort(B.begin(), B.end());
                      B.erase(std::unique(B.begin(), B.end()), B.end());
                      return B;
                  }()).empty());
        }
        // valid iff the name map is a simplicial map of nerves
        const auto Nd = nerve(C.domain).complex;
        const auto Nc = nerve(C.codomain).complex;
        std::map<Vertex, Vertex> vm;
        for (const auto& name : C.domain.names()) {
            if (Nd.has_vertex(name)) vm[name] = C(name);
        }
        CHECK(verdict.valid == simplicial_map_violation(Nd, Nc, vm).empty());
    }
    CHECK(invalid_seen > 0);  // the sample must exercise both outcomes
}

TEST_CASE("compose and invert") {
    const auto three = gallery::make_cover("three_arcs");
    const auto id = identity_carrier(three);
    const auto rotated = make_carrier(
        three, three, {{"arcA", "arcB"}, {"arcB", "arcC"}, {"arcC", "arcA"}});
    CHECK(compose(id, rotated).assignment == rotated.assignment);
    CHECK(compose(rotated, id).assignment == rotated.assignment);

    const auto inv = invert(rotated);
    REQUIRE(inv.has_value());
    CHECK(compose(rotated, *inv).assignment == id.assignment);

    const auto two = gallery::make_cover("two_arcs");
    const auto constant = make_carrier(
        two, two, {{"arc0", "arc0"}, {"arc1", "arc0"}});
    CHECK(!invert(constant).has_value());

    CHECK_THROWS_AS(compose(rotated, constant), MalformedInput);
}

TEST_CASE("S and B carriers validate, invert, and satisfy S = I . B") {
    for (const auto& id : {"three_arcs", "two_arcs", "face_cover_bd_delta3",
                           "bary_stars:cycle6"}) {
        const auto F = gallery::make_cover(id);
        const auto S = S_carrier(F);
        const auto B = B_carrier(F);
        CHECK(validate_carrier(S).valid);
        CHECK(validate_carrier(B).valid);
        CHECK(invert(S).has_value());
        CHECK(invert(B).has_value());
        CHECK(validate_carrier(*invert(B)).valid);

        // I: bst v -> st v is the identity on names here, so S = I . B
        std::map<PieceName, PieceName> identity_names;
        for (const auto& name : B.codomain.names()) identity_names[name] = name;
        const auto I = make_carrier(B.codomain, S.codomain, std::move(identity_names));
        CHECK(validate_carrier(I).valid);
        CHECK(compose(B, I).assignment == S.assignment);
    }
}

TEST_CASE("is_carried and is_weakly_carried") {
    const auto K = gallery::cycle(6);
    const auto cover = Cover::closed(K, {{"whole", K}});
    const auto C = identity_carrier(cover);
    CHECK(is_carried(identity_map(K), C).holds);
    CHECK(is_weakly_carried(identity_map(K), C).holds);

    // map into a piece the carrier forbids
    const auto two = gallery::make_cover("two_arcs");
    const auto swap = make_carrier(two, two, {{"arc0", "arc1"}, {"arc1", "arc0"}});
    const auto not_carried = is_carried(identity_map(gallery::cycle(12)), swap);
    CHECK(!not_carried.holds);
    CHECK(!not_carried.witness.empty());

    // every carried map is weakly carried, over a sample of carriers
    std::mt19937 gen(99);
    for (int i = 0; i < 20; ++i) {
        const auto cover2 = gallery::random_subcomplex_cover(gen(), 2 + i % 4);
        const auto id2 = identity_carrier(cover2);
        const auto f = identity_map(cover2.base());
        if (is_carried(f, id2).holds) CHECK(is_weakly_carried(f, id2).holds);
    }
}

TEST_CASE("cone certificates and the carried-map constructor") {
    // one-piece cover into a cone codomain: constant map to the apex
    const auto seg = SimplicialComplex::from_facets({{"a", "b"}});
    const auto dom = Cover::closed(seg, {{"all", seg}});
    const auto cone_cod = Cover::closed(seg, {{"all", seg}});
    const auto C = make_carrier(dom, cone_cod, {{"all", "all"}});
    const auto cones = compute_cone_certificates(C);
    REQUIRE(cones.count({"all"}) == 1);
    const auto f = carried_map_via_cones(C, cones);
    CHECK(is_carried(f, subdivide_domain(C)).holds);
    for (const auto& [v, w] : f.vertex_map) CHECK(w == cones.at({"all"}));

    // three_arcs into its barycentric-star codomain via the B carrier
    const auto F = gallery::make_cover("three_arcs");
    const auto B = B_carrier(F);
    const auto bc = compute_cone_certificates(B);
    const auto g = carried_map_via_cones(B, bc);
    CHECK(is_carried(g, subdivide_domain(B)).holds);
}

TEST_CASE("extend_carried_map") {
    const auto F = gallery::make_cover("three_arcs");
    const auto B = B_carrier(F);
    const auto cones = compute_cone_certificates(B);
    const auto full = carried_map_via_cones(B, cones);

    // restriction to a subcomplex extends back to a carried map
    const auto sdX = full.source;
    std::vector<Simplex> some;
    for (const auto& f : sdX.facets()) {
        if (some.size() < 3) some.push_back(f);
    }
    const auto A = SimplicialComplex::from_facets(std::move(some));
    std::map<Vertex, Vertex> partial;
    for (const auto& v : A.vertices()) partial[v] = full.vertex_map.at(v);
    const auto f0 = make_simplicial_map(A, full.target, std::move(partial));
    const auto ext = extend_carried_map(f0, B, cones);
    REQUIRE(ext.map.has_value());
    CHECK(is_carried(*ext.map, subdivide_domain(B)).holds);
    for (const auto& v : A.vertices()) {
        CHECK(ext.map->vertex_map.at(v) == f0.vertex_map.at(v));
    }

    // A = sd(X) returns f0 unchanged
    const auto whole = extend_carried_map(full, B, cones);
    REQUIRE(whole.map.has_value());
    CHECK(whole.map->vertex_map == full.vertex_map);
}

TEST_CASE("canonical_nerve_map and is_carried_by_K") {
    const auto K = gallery::cycle(6);
    const auto one = Cover::closed(K, {{"whole", K}});
    const auto constant = canonical_nerve_map(one);
    for (const auto& [v, w] : constant.vertex_map) CHECK(w == "whole");
    CHECK(is_carried_by_K(constant, one).holds);

    for (const auto& id : {"three_arcs", "two_arcs", "face_cover_bd_delta3"}) {
        const auto F = gallery::make_cover(id);
        const auto h = canonical_nerve_map(F);
        CHECK(is_carried_by_K(h, F).holds);
    }

    // perturbed map: send one barycenter to a piece not containing its face
    const auto F = gallery::make_cover("three_arcs");
    const auto h = canonical_nerve_map(F);
    auto broken = h.vertex_map;
    // v00 lies in arcA and arcC only; arcB omits it
    broken[barycenter_label({"v00"})] = "arcB";
    if (simplicial_map_violation(h.source, h.target, broken).empty()) {
        const auto bad = SimplicialMap{h.source, h.target, broken};
        CHECK(!is_carried_by_K(bad, F).holds);
    } else {
        CHECK(true);  // perturbation already fails simpliciality; equally a rejection
    }
}
