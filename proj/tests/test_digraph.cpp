#include <catch2/catch_amalgamated.hpp>

#include "cordial/digraph.hpp"
#include "oracle.hpp"

using namespace cordial;

TEST_CASE("digraph construction validates its arc set", "[digraph]") {
    CHECK_NOTHROW(Digraph(2, {{0, 1}}));
    CHECK_NOTHROW(Digraph(0, {}));

    try {
        Digraph(2, {{0, 1}, {1, 0}});
        FAIL("digon accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::digon_pair);
        CHECK(std::string(e.what()).find("(1,0)") != std::string::npos);
    }

    try {
        Digraph(3, {{0, 0}});
        FAIL("loop accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::loop_arc);
        CHECK(std::string(e.what()).find("(0,0)") != std::string::npos);
    }

    try {
        Digraph(3, {{0, 1}, {0, 1}});
        FAIL("duplicate accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::duplicate_arc);
    }

    try {
        Digraph(2, {{0, 2}});
        FAIL("out-of-range accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::index_out_of_range);
        CHECK(std::string(e.what()).find("(0,2)") != std::string::npos);
    }
}

TEST_CASE("induced arc labels follow g(u,v) = f(v) - f(u)", "[digraph]") {
    const Digraph path3(3, {{0, 1}, {1, 2}});
    CHECK(induce_arc_labels(path3, {0, 1, 0}) == std::vector<int>{1, -1});

    const Digraph arc(2, {{0, 1}});
    CHECK(induce_arc_labels(arc, {1, 1}) == std::vector<int>{0});

    const Digraph vee(3, {{0, 1}, {2, 1}});
    CHECK(induce_arc_labels(vee, {0, 1, 1}) == std::vector<int>{1, 0});

    CHECK_THROWS_AS(induce_arc_labels(path3, {0, 1}), error);
}

TEST_CASE("lambda counts arc labels", "[digraph]") {
    const Digraph path3(3, {{0, 1}, {1, 2}});
    CHECK(lambda(path3, {0, 1, 0}) == LambdaTriple{1, 1, 0});

    const Digraph empty(4, {});
    CHECK(lambda(empty, {0, 1, 0, 1}) == LambdaTriple{0, 0, 0});

    const Digraph out_star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(lambda(out_star, {0, 1, 1, 0}) == LambdaTriple{2, 0, 1});

    CHECK_THROWS_AS(lambda(path3, {0, 1, 0, 1}), error);
}

TEST_CASE("vertex labeling friendliness", "[digraph]") {
    CHECK(is_friendly(VertexLabeling{0, 1, 0, 1}));
    CHECK_FALSE(is_friendly(VertexLabeling{0, 0, 0, 1}));
    CHECK(is_friendly(VertexLabeling{0, 1, 1}));
    CHECK(is_friendly(VertexLabeling{}));  // vacuous
}

TEST_CASE("lambda triple friendliness", "[digraph]") {
    CHECK(is_friendly(LambdaTriple{1, 1, 0}));
    CHECK_FALSE(is_friendly(LambdaTriple{2, 0, 1}));
    CHECK(is_friendly(LambdaTriple{0, 0, 0}));
}

TEST_CASE("reverse flips every arc", "[digraph]") {
    const Digraph path3(3, {{0, 1}, {1, 2}});
    CHECK(reverse(path3) == Digraph(3, {{1, 0}, {2, 1}}));

    const Digraph out_star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(reverse(out_star) == Digraph(4, {{1, 0}, {2, 0}, {3, 0}}));

    oracle::RandomInstances rnd(101);
    for (int i = 0; i < 50; ++i) {
        const Digraph d = rnd.digraph(10);
        CHECK(reverse(reverse(d)) == d);
    }
}

TEST_CASE("complement labeling swaps 0 and 1", "[digraph]") {
    CHECK(complement_labeling({0, 1, 0}) == VertexLabeling{1, 0, 1});
    CHECK(is_friendly(complement_labeling({0, 1, 1})));
    oracle::RandomInstances rnd(102);
    for (int i = 0; i < 50; ++i) {
        const VertexLabeling f = rnd.friendly_labeling(i % 11);
        CHECK(complement_labeling(complement_labeling(f)) == f);
    }
}

TEST_CASE("lambda identities under reversal and complementation", "[digraph][property]") {
    oracle::RandomInstances rnd(103);
    for (int i = 0; i < 300; ++i) {
        const Digraph d = rnd.digraph(10);
        const VertexLabeling f = rnd.friendly_labeling(d.order());
        const LambdaTriple t = lambda(d, f);
        const LambdaTriple swapped{t.beta, t.alpha, t.gamma};

        CHECK(lambda(reverse(d), f) == swapped);
        CHECK(lambda(d, complement_labeling(f)) == swapped);
        CHECK(lambda(reverse(d), complement_labeling(f)) == t);
        CHECK(t.total() == static_cast<long long>(d.arc_count()));
        CHECK(is_friendly(t) == is_friendly(swapped));

        const auto labels = induce_arc_labels(d, f);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            CHECK(labels[j] >= -1);
            CHECK(labels[j] <= 1);
            const Arc a = d.arcs()[j];
            CHECK((labels[j] == 0) == (f[a.from] == f[a.to]));
        }
    }
}
