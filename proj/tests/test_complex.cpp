#include <set>

#include "doctest.h"
#include "earcomb/complex.hpp"
#include "earcomb/errors.hpp"

using namespace earcomb;

namespace {

SimplicialComplex hexagon() {
    return SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
}

SimplicialComplex tetra_boundary() {
    return SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

// definitional shelling check: F_k meets the union of earlier facets in a
// nonempty pure complex of codimension 1 (k >= 2)
bool shelling_by_definition(const std::vector<Face>& order) {
    for (size_t k = 1; k < order.size(); ++k) {
        std::set<Face> inter;  // faces of F_k also in an earlier facet
        const Face& F = order[k];
        for (size_t mask = 1; mask < (size_t(1) << F.size()); ++mask) {
            Face f;
            for (size_t b = 0; b < F.size(); ++b)
                if (mask & (size_t(1) << b)) f.push_back(F[b]);
            for (size_t j = 0; j < k; ++j)
                if (std::includes(order[j].begin(), order[j].end(), f.begin(), f.end())) {
                    inter.insert(f);
                    break;
                }
        }
        if (inter.empty()) return false;
        size_t want = F.size() - 1;
        std::set<Face> maximal;
        for (const Face& f : inter) {
            bool is_max = true;
            for (const Face& g : inter)
                if (g != f && std::includes(g.begin(), g.end(), f.begin(), f.end())) is_max = false;
            if (is_max) maximal.insert(f);
        }
        for (const Face& f : maximal)
            if (f.size() != want) return false;
    }
    return true;
}

bool shelling_passes(const SimplicialComplex& K, const std::vector<Face>& order) {
    try {
        verify_shelling(K, order);
        return true;
    } catch (const NotAShellingError&) {
        return false;
    }
}

}  // namespace

TEST_CASE("f-vectors") {
    CHECK(f_vector(SimplicialComplex::from_facets({{1}})) == std::vector<long long>{1, 1});
    CHECK(f_vector(hexagon()) == std::vector<long long>{1, 6, 6});
    CHECK(f_vector(tetra_boundary()) == std::vector<long long>{1, 4, 6, 4});
}

TEST_CASE("h-vectors") {
    CHECK(h_vector(hexagon()) == std::vector<long long>{1, 4, 1});
    CHECK(h_vector(SimplicialComplex::from_facets({{1, 2, 3}})) ==
          std::vector<long long>{1, 0, 0, 0});
    CHECK(h_vector(SimplicialComplex::from_facets({{1}, {2}, {3}})) ==
          std::vector<long long>{1, 2});
}

TEST_CASE("f/h transform is inverse-compatible and sums to facet count") {
    for (const auto& K : {hexagon(), tetra_boundary(),
                          SimplicialComplex::from_facets({{1, 2, 3}, {2, 3, 4}})}) {
        auto f = f_vector(K), h = h_vector(K);
        CHECK(h_to_f(h) == f);
        CHECK(f_to_h(f) == h);
        long long sum = 0;
        for (long long x : h) sum += x;
        CHECK(sum == (long long)K.facets().size());
    }
}

TEST_CASE("purity is enforced") {
    auto impure = SimplicialComplex::from_facets({{1, 2, 3}, {4, 5}});
    CHECK_THROWS_AS(f_vector(impure), NotPureError);
}

TEST_CASE("shelling verification") {
    auto K = SimplicialComplex::from_facets({{1, 2, 3}, {1, 2, 4}});
    auto cert = verify_shelling(K, {{1, 2, 3}, {1, 2, 4}});
    CHECK(cert.restrictions[0].empty());
    CHECK(cert.restrictions[1] == Face{4});

    auto disjointish = SimplicialComplex::from_facets({{1, 2, 3}, {1, 4, 5}});
    try {
        verify_shelling(disjointish, {{1, 2, 3}, {1, 4, 5}});
        CHECK(false);
    } catch (const NotAShellingError& e) {
        CHECK(e.k == 2);
        CHECK(e.j == 1);
    }
}

TEST_CASE("single facet is a shelling with empty restriction") {
    auto K = SimplicialComplex::from_facets({{1, 2, 3}});
    auto cert = verify_shelling(K, {{1, 2, 3}});
    CHECK(cert.restrictions == std::vector<Face>{{}});
}

TEST_CASE("shelling intervals partition the face set") {
    for (const auto& K : {hexagon(), tetra_boundary()}) {
        auto order = find_shelling(K);
        REQUIRE(order.has_value());
        auto cert = verify_shelling(K, *order);
        std::set<Face> seen;
        for (size_t i = 0; i < cert.order.size(); ++i) {
            const Face& F = cert.order[i];
            const Face& R = cert.restrictions[i];
            for (size_t mask = 0; mask < (size_t(1) << F.size()); ++mask) {
                Face f;
                for (size_t b = 0; b < F.size(); ++b)
                    if (mask & (size_t(1) << b)) f.push_back(F[b]);
                if (std::includes(f.begin(), f.end(), R.begin(), R.end()))
                    CHECK(seen.insert(f).second);
            }
        }
        CHECK(seen.size() == K.face_count());
    }
}

TEST_CASE("verify_shelling agrees with the definitional check") {
    std::vector<std::vector<Face>> orders = {
        {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}},
        {{1, 2}, {3, 4}, {2, 3}, {4, 5}, {5, 6}, {1, 6}},
        {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}},
        {{1, 2, 3}, {2, 3, 4}},
        {{1, 2, 3}, {1, 4, 5}},
        {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}},
    };
    for (const auto& order : orders) {
        auto K = SimplicialComplex::from_facets(order);
        if (order.size() != K.facets().size()) continue;
        CHECK(shelling_passes(K, order) == shelling_by_definition(order));
    }
}

TEST_CASE("skeleton") {
    CHECK(skeleton(tetra_boundary(), 1).facets().size() == 6);
    CHECK(skeleton(tetra_boundary(), 2) == tetra_boundary());
    CHECK(skeleton(SimplicialComplex::from_facets({{1, 2, 3}}), 0).facets().size() == 3);
    CHECK_THROWS_AS(skeleton(tetra_boundary(), 5), BadDimensionError);
}

TEST_CASE("boundary subcomplex") {
    auto edge = SimplicialComplex::from_facets({{1, 2}});
    CHECK(boundary_subcomplex(edge).facets() == std::vector<Face>{{1}, {2}});
    auto path = SimplicialComplex::from_facets({{1, 2}, {2, 3}});
    CHECK(boundary_subcomplex(path).facets() == std::vector<Face>{{1}, {3}});
    CHECK(boundary_subcomplex(hexagon()).is_empty_complex());
}

TEST_CASE("barycentric subdivision") {
    auto edge = barycentric_subdivision(SimplicialComplex::from_facets({{1, 2}}));
    CHECK(edge.complex.facets().size() == 2);
    CHECK(edge.complex.vertices().size() == 3);

    auto tri = barycentric_subdivision(SimplicialComplex::from_facets({{1, 2, 3}}));
    CHECK(f_vector(tri.complex) == std::vector<long long>{1, 7, 12, 6});

    auto cycle = barycentric_subdivision(SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}}));
    CHECK(f_vector(cycle.complex) == std::vector<long long>{1, 6, 6});

    for (const auto* b : {&edge, &tri, &cycle}) CHECK(is_proper_coloring(b->complex, b->coloring));
}

TEST_CASE("color selection") {
    auto b = barycentric_subdivision(SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}}));
    auto mid = color_selected(b.complex, b.coloring, RankSet(3, {2}));
    CHECK(mid.facets().size() == 3);
    CHECK(mid.dim() == 0);
    CHECK(color_selected(b.complex, b.coloring, RankSet(3, {1, 2})) == b.complex);
    CHECK(color_selected(b.complex, b.coloring, RankSet(3, {})).is_empty_complex());
}

TEST_CASE("void and empty complexes are distinct") {
    SimplicialComplex empty;
    auto voidc = SimplicialComplex::from_facets({{}});
    CHECK(empty.is_empty_complex());
    CHECK_FALSE(empty.is_void_complex());
    CHECK(voidc.is_void_complex());
    CHECK(f_vector(voidc) == std::vector<long long>{1});
}
