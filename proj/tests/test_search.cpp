#include <catch2/catch_amalgamated.hpp>

#include "cordial/constructions.hpp"
#include "cordial/enumeration.hpp"
#include "cordial/search.hpp"
#include "oracle.hpp"

using namespace cordial;

TEST_CASE("friendly labelings stream lexicographically", "[search]") {
    CHECK(friendly_labelings(4, false).size() == 6);  // C(4,2)
    CHECK(friendly_labelings(3, false).size() == 6);  // C(3,1) + C(3,2)
    CHECK(friendly_labelings(4, true).size() == 3);   // complement pairing halves

    const auto all3 = friendly_labelings(3, false);
    const std::vector<VertexLabeling> expected = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1},
                                                  {1, 0, 0}, {1, 0, 1}, {1, 1, 0}};
    CHECK(all3 == expected);

    // n = 0: the single empty labeling
    CHECK(friendly_labelings(0, false) == std::vector<VertexLabeling>{{}});
    CHECK(friendly_labelings(0, true) == std::vector<VertexLabeling>{{}});

    for (int n = 1; n <= 8; ++n) {
        const auto pruned = friendly_labelings(n, true);
        CHECK(pruned.size() == friendly_labeling_count(n) / 2);
        for (const auto& f : pruned) {
            CHECK(f[0] == 0);
            CHECK(is_friendly(f));
        }
        const auto full = friendly_labelings(n, false);
        CHECK(full.size() == friendly_labeling_count(n));
        CHECK(std::is_sorted(full.begin(), full.end()));
    }
}

TEST_CASE("find_cordial_labeling returns the least witness", "[search]") {
    const Digraph path3(3, {{0, 1}, {1, 2}});
    const CordialityResult r = find_cordial_labeling(path3);
    REQUIRE(r.cordial);
    CHECK(is_friendly(*r.witness));
    CHECK(is_friendly(*r.lambda));
    // least witness confirmed by the exhaustive oracle
    CHECK(*r.witness == *oracle::naive_cordial_witness(path3));
    CHECK(*r.witness == VertexLabeling{0, 0, 1});

    const Digraph out_star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(find_cordial_labeling(out_star).cordial);
    CHECK_FALSE(find_cordial_labeling(out_star).witness.has_value());

    const Digraph arc(2, {{0, 1}});
    const CordialityResult ra = find_cordial_labeling(arc);
    REQUIRE(ra.cordial);
    CHECK(*ra.witness == VertexLabeling{0, 1});
    CHECK(*ra.lambda == LambdaTriple{1, 0, 0});
}

TEST_CASE("is_23_cordial on the cited digraphs", "[search]") {
    CHECK(is_23_cordial(directed_cycle(3)));
    CHECK_FALSE(is_23_cordial(Digraph(4, {{0, 1}, {1, 2}, {3, 2}})));  // > > <
    CHECK(is_23_cordial(Digraph(1, {})));
    CHECK(is_23_cordial(Digraph(0, {})));
}

TEST_CASE("count_cordial_labelings scans the full space", "[search]") {
    CHECK(count_cordial_labelings(Digraph(2, {{0, 1}})) == 2);
    CHECK(count_cordial_labelings(Digraph(4, {{0, 1}, {0, 2}, {0, 3}})) == 0);

    const Digraph path3(3, {{0, 1}, {1, 2}});
    CHECK(count_cordial_labelings(path3) == oracle::naive_count_cordial_labelings(path3));
    CHECK(count_cordial_labelings(path3) == 6);  // all six friendly labelings work

    oracle::RandomInstances rnd(201);
    for (int i = 0; i < 40; ++i) {
        const Digraph d = rnd.digraph(8);
        const long long count = count_cordial_labelings(d);
        CHECK(count == oracle::naive_count_cordial_labelings(d));
        CHECK(count == count_cordial_labelings(reverse(d)));
        if (d.order() >= 1) CHECK(count % 2 == 0);
    }
}

TEST_CASE("search_stats reports the pruned scan", "[search]") {
    const SearchStats path4 = search_stats(directed_path(4));
    CHECK(path4.labelings_examined == 3);
    CHECK(path4.labelings_examined <= 6);
    CHECK(path4.witnesses_found == 1);
    CHECK(path4.pruned_by_complement == 3);

    const SearchStats empty = search_stats(Digraph(0, {}));
    CHECK(empty.labelings_examined == 1);
    CHECK(empty.witnesses_found == 1);
    CHECK(empty.pruned_by_complement == 0);

    for (int n = 2; n <= 8; n += 2) {
        const SearchStats s = search_stats(directed_path(n));
        CHECK(s.labelings_examined ==
              static_cast<long long>(friendly_labeling_count(n)) / 2);
        CHECK(s.labelings_examined >= s.witnesses_found);
    }
}

TEST_CASE("decisions are reversal-invariant and complement-closed", "[search][property]") {
    oracle::RandomInstances rnd(202);
    for (int i = 0; i < 60; ++i) {
        const Digraph d = rnd.digraph(9);
        const CordialityResult r = find_cordial_labeling(d);
        CHECK(r.cordial == is_23_cordial(reverse(d)));
        if (r.cordial) {
            const VertexLabeling comp = complement_labeling(*r.witness);
            CHECK(is_friendly(comp));
            CHECK(is_friendly(lambda(d, comp)));
        }
    }
}

TEST_CASE("pruned decision matches the naive oracle on all small tree orientations",
          "[search][oracle]") {
    for (int n = 1; n <= 6; ++n) {
        for (const UndirectedGraph& tree : free_trees(n)) {
            for (const Digraph& d : orientations(tree)) {
                const CordialityResult r = find_cordial_labeling(d);
                const auto naive = oracle::naive_cordial_witness(d);
                REQUIRE(r.cordial == naive.has_value());
                if (r.cordial) CHECK(*r.witness == *naive);
            }
        }
    }
}
