#include <doctest.h>

#include "nervelab/carrier.hpp"
#include "nervelab/gallery.hpp"

using namespace nervelab;

namespace {

// every subcollection, by brute force over the power set
std::vector<std::vector<PieceName>> all_collections(const Cover& cover) {
    std::vector<std::vector<PieceName>> out;
    const auto& names = cover.names();
    for (std::size_t mask = 1; mask < (1u << names.size()); ++mask) {
        std::vector<PieceName> A;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (mask & (1u << i)) A.push_back(names[i]);
        }
        out.push_back(std::move(A));
    }
    return out;
}

}  // namespace

TEST_CASE("intersection and union") {
    const auto two = gallery::make_cover("two_arcs");
    const auto both = intersection(two, {"arc0", "arc1"});
    CHECK(both.members == FaceSet{{"v00"}, {"v06"}});
    CHECK(intersection(two, {"arc0"}).members == two.piece("arc0").members);
    CHECK_THROWS_AS(intersection(two, {"nope"}), MalformedInput);

    const auto three = gallery::make_cover("three_arcs");
    const auto all = union_of(three, {"arcA", "arcB", "arcC"});
    CHECK(all.members == gallery::cycle(12).faces());

    const auto full = SimplicialComplex::from_facets({{"a", "b", "c"}});
    const auto st = open_star_cover(full);
    CHECK(!intersection(st, {"a", "b", "c"}).empty());  // centers span a face
}

TEST_CASE("nerve of the arc covers") {
    const auto one = Cover::closed(gallery::cycle(6),
                                   {{"whole", gallery::cycle(6)}});
    CHECK(nerve(one).complex.facets() == std::vector<Simplex>{{"whole"}});

    const auto N3 = nerve(gallery::make_cover("three_arcs"));
    CHECK(N3.complex.f_vector() == std::vector<std::size_t>{3, 3});  // triangle boundary
    CHECK(!N3.complex.has_face(make_simplex({"arcA", "arcB", "arcC"})));

    const auto N2 = nerve(gallery::make_cover("two_arcs"));
    CHECK(N2.complex.f_vector() == std::vector<std::size_t>{2, 1});  // one edge
}

TEST_CASE("nerve witnesses certify and match brute force on small covers") {
    for (int i = 0; i < 8; ++i) {
        const auto cover = gallery::random_subcomplex_cover(500 + i, 2 + i % 5);
        const auto N = nerve(cover);
        for (const auto& A : all_collections(cover)) {
            const bool face = N.complex.has_face(make_simplex(A));
            const auto common = intersection(cover, A);
            CHECK(face == !common.empty());
            if (face) {
                const auto w = N.witnesses.at(make_simplex(A));
                CHECK(common.contains(w));
            }
        }
    }
}

TEST_CASE("open star cover") {
    const auto tri = SimplicialComplex::from_facets({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const auto cover = open_star_cover(tri);
    CHECK(cover.size() == 3);
    const auto N = nerve(cover);
    CHECK(N.complex.f_vector() == std::vector<std::size_t>{3, 3});
    CHECK(!N.complex.has_face(make_simplex({"a", "b", "c"})));  // triple empty
    // every face of the base is covered
    for (const auto& s : tri.faces()) {
        bool covered = false;
        for (const auto& name : cover.names()) covered |= cover.piece(name).contains(s);
        CHECK(covered);
    }
}

TEST_CASE("barycentric star cover") {
    const auto edge = SimplicialComplex::from_facets({{"a", "b"}});
    const auto cover = barycentric_star_cover(edge);
    CHECK(cover.size() == 2);
    const auto mid = barycenter_label({"a", "b"});
    CHECK(cover.piece("a").contains({mid}));
    CHECK(cover.piece("b").contains({mid}));

    const auto K = gallery::make_complex("torus7");
    const auto bst = barycentric_star_cover(K);
    FaceSet all;
    for (const auto& name : bst.names()) {
        for (const auto& s : bst.piece(name).members) all.insert(s);
    }
    CHECK(all == barycentric_subdivision(K).faces());
    for (const auto& s : K.faces()) {
        std::vector<PieceName> A(s.begin(), s.end());
        CHECK(intersection(bst, A).contains({barycenter_label(s)}));
    }
}

TEST_CASE("check_regularity on the named covers") {
    const auto three = check_regularity(gallery::make_cover("three_arcs"),
                                        RegularityMode::Regular);
    CHECK(three.overall == Verdict3::Holds);

    const auto two = check_regularity(gallery::make_cover("two_arcs"),
                                      RegularityMode::Regular);
    CHECK(two.overall == Verdict3::Fails);
    bool obstruction_found = false;
    for (const auto& e : two.entries) {
        if (e.verdict == Verdict3::Fails) {
            obstruction_found = true;
            CHECK(!e.certificate.empty());
        }
    }
    CHECK(obstruction_found);

    const auto face4 = check_regularity(gallery::make_cover("face_cover_bd_delta3"),
                                        RegularityMode::Regular);
    CHECK(face4.overall == Verdict3::Holds);
}

TEST_CASE("regular holds implies weak mode never fails homologically") {
    for (const auto& id : {"three_arcs", "face_cover_bd_delta3"}) {
        const auto cover = gallery::make_cover(id);
        REQUIRE(check_regularity(cover, RegularityMode::Regular).overall == Verdict3::Holds);
        CHECK(check_regularity(cover, RegularityMode::WeaklyRegular).overall !=
              Verdict3::Fails);
    }
}

TEST_CASE("n-regularity") {
    const auto three = gallery::make_cover("three_arcs");
    CHECK(check_regularity(three, RegularityMode::NRegular, 1).overall == Verdict3::Holds);
    // n = 0, |A| = 1 reduces to nonemptiness
    const auto r0 = check_regularity(three, RegularityMode::NRegular, 0);
    for (const auto& e : r0.entries) {
        if (e.collection.size() == 1) CHECK(e.verdict == Verdict3::Holds);
    }
    // two_arcs is 1-regular (arcs connected, pairwise intersection nonempty)
    // even though it is not regular: the degree bound is doing real work
    const auto two = gallery::make_cover("two_arcs");
    CHECK(check_regularity(two, RegularityMode::NRegular, 1).overall == Verdict3::Holds);
    CHECK(check_regularity(two, RegularityMode::NRegular, 2).overall == Verdict3::Fails);
}

TEST_CASE("cover_star") {
    const auto three = gallery::make_cover("three_arcs");
    CHECK(cover_star(three, "arcA").members == gallery::cycle(12).faces());
    CHECK_THROWS_AS(cover_star(three, "nope"), MalformedInput);

    const auto disjoint = Cover::closed(
        SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}}),
        {{"left", SimplicialComplex::from_facets({{"a", "b"}})},
         {"right", SimplicialComplex::from_facets({{"c", "d"}})}});
    CHECK(cover_star(disjoint, "left").members == disjoint.piece("left").members);

    // star contains the piece, on every suite cover piece
    const auto cover = gallery::make_cover("bary_stars:cycle6");
    for (const auto& name : cover.names()) {
        const auto st = cover_star(cover, name);
        for (const auto& s : cover.piece(name).members) CHECK(st.contains(s));
    }
}

TEST_CASE("covers_isomorphic") {
    const auto three = gallery::make_cover("three_arcs");
    const auto self = covers_isomorphic(three, three);
    REQUIRE(self.has_value());
    CHECK(validate_carrier(*self).valid);

    CHECK(!covers_isomorphic(three, gallery::make_cover("two_arcs")).has_value());

    const auto K = gallery::cycle(6);
    const auto iso = covers_isomorphic(open_star_cover(K), barycentric_star_cover(K));
    REQUIRE(iso.has_value());
    CHECK(invert(*iso).has_value());
}

TEST_CASE("certify_contractible") {
    CHECK(certify_contractible(SimplicialComplex::from_facets({{"a", "b", "c"}})).first ==
          Verdict3::Holds);
    CHECK(certify_contractible(gallery::cycle(6)).first == Verdict3::Fails);
    CHECK(certify_contractible(SimplicialComplex()).first == Verdict3::Fails);
    CHECK(certify_contractible(gallery::bd_delta(3)).first == Verdict3::Fails);
}
