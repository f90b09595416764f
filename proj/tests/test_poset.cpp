#include "doctest.h"
#include "earcomb/errors.hpp"
#include "earcomb/poset.hpp"

using namespace earcomb;

TEST_CASE("boolean lattices") {
    auto B1 = boolean_lattice(1);
    CHECK(B1.poset.elements().size() == 2);
    CHECK(B1.poset.top_rank() == 1);

    auto B3 = boolean_lattice(3);
    CHECK(B3.poset.elements().size() == 8);
    CHECK(B3.labeling.size() == 12);

    // chain {} < {2} < {2,3} < {1,2,3} reads off the added elements
    Chain c = {0, 0b010, 0b110, 0b111};
    CHECK(chain_label(c, B3.labeling) == std::vector<int>{2, 3, 1});
}

TEST_CASE("rank selection") {
    auto B3 = boolean_lattice(3);
    auto sel = rank_select(B3.poset, RankSet(3, {1}));
    CHECK(sel.elements().size() == 5);
    CHECK(sel.top_rank() == 2);

    auto full = rank_select(B3.poset, RankSet(3, {1, 2}));
    CHECK(full.elements().size() == 8);
    CHECK(full.maximal_chains().size() == B3.poset.maximal_chains().size());

    CHECK_THROWS_AS(rank_select(B3.poset, RankSet(3, {})), EmptyRankSetError);
}

TEST_CASE("order complexes") {
    std::map<int, int> ranks = {{0, 0}, {1, 1}, {2, 2}};
    auto chain3 = RankedPoset::from_covers(ranks, {{0, 1}, {1, 2}});
    CHECK(order_complex(chain3).facets() == std::vector<Face>{{1}});

    auto B3 = boolean_lattice(3);
    auto hex = order_complex(B3.poset);
    CHECK(f_vector(hex) == std::vector<long long>{1, 6, 6});
    CHECK(h_vector(hex) == std::vector<long long>{1, 4, 1});

    auto B4 = boolean_lattice(4);
    auto bip = order_complex(rank_select(B4.poset, RankSet(4, {1, 3})));
    CHECK(f_vector(bip) == std::vector<long long>{1, 8, 12});
}

TEST_CASE("EL verification") {
    auto B3 = boolean_lattice(3);
    CHECK(verify_el_labeling(B3.poset, B3.labeling));
    CHECK(is_sd_el(B3.poset, B3.labeling));

    // B_2 with both bottom covers labeled 1: two increasing chains in [0,1]
    std::map<int, int> ranks = {{0, 0}, {1, 1}, {2, 1}, {3, 2}};
    auto B2 = RankedPoset::from_covers(ranks, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    EdgeLabeling bad = {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 2}};
    CHECK_FALSE(verify_el_labeling(B2, bad));
}

TEST_CASE("upsilon completion") {
    auto B3 = boolean_lattice(3);
    CHECK(upsilon(B3.poset, B3.labeling, {0, 0b111}) ==
          Chain{0, 0b001, 0b011, 0b111});
    Chain maximal = {0, 0b010, 0b011, 0b111};
    CHECK(upsilon(B3.poset, B3.labeling, maximal) == maximal);
    CHECK(upsilon(B3.poset, B3.labeling, {0, 0b010, 0b111}) ==
          Chain{0, 0b010, 0b011, 0b111});
    // idempotence
    Chain e = {0b010};
    Chain u = upsilon(B3.poset, B3.labeling, e);
    CHECK(upsilon(B3.poset, B3.labeling, u) == u);
}

TEST_CASE("flag vectors of boolean lattices") {
    auto B3 = boolean_lattice(3);
    auto f = flag_f(B3.poset);
    auto h = flag_h(B3.poset);
    CHECK(f.get({1}) == 3);
    CHECK(f.get({1, 2}) == 6);
    CHECK(f.get({}) == 1);
    CHECK(h.get({1}) == 2);
    CHECK(h.get({1, 2}) == 1);
    CHECK(h.get({}) == 1);

    auto B4 = boolean_lattice(4);
    CHECK(flag_h(B4.poset).get({1, 3}) == 5);
}

TEST_CASE("flag h via descents agrees with inclusion-exclusion") {
    for (int d = 2; d <= 5; ++d) {
        auto B = boolean_lattice(d);
        CHECK(flag_h_by_descents(B.poset, B.labeling) == flag_h(B.poset));
    }
}

TEST_CASE("flag f counts rank-selected facets") {
    auto B4 = boolean_lattice(4);
    auto f = flag_f(B4.poset);
    for (const auto& S : subsets_of_interval(4)) {
        if (S.empty()) continue;
        auto delta = order_complex(rank_select(B4.poset, RankSet(4, S)));
        CHECK((long long)delta.facets().size() == f.get(S));
    }
}

TEST_CASE("h-vector refinement") {
    for (int d = 2; d <= 4; ++d) {
        auto B = boolean_lattice(d);
        auto h = flag_h(B.poset);
        auto ref = refinement(h);
        auto hv = h_vector(order_complex(B.poset));
        CHECK(ref == hv);
    }
}

TEST_CASE("flag vectors of balanced complexes") {
    auto B3 = boolean_lattice(3);
    auto delta = order_complex(B3.poset);
    std::map<int, int> color;
    for (int id : B3.poset.elements())
        if (B3.poset.rank_of(id) > 0 && B3.poset.rank_of(id) < 3) color[id] = B3.poset.rank_of(id);
    CHECK(flag_f_of_complex(delta, color, 3) == flag_f(B3.poset));
    CHECK(flag_h_of_complex(delta, color, 3) == flag_h(B3.poset));
}

TEST_CASE("gradedness is validated") {
    std::map<int, int> ranks = {{0, 0}, {1, 1}, {2, 2}};
    CHECK_THROWS(RankedPoset::from_covers(ranks, {{0, 1}, {1, 2}, {0, 2}}));
}
