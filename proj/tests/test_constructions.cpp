#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "cordial/constructions.hpp"
#include "cordial/search.hpp"

using namespace cordial;

TEST_CASE("directed cycle labelings verify for every length", "[constructions]") {
    CHECK_THROWS_AS(construct_directed_cycle_labeling(2), error);
    try {
        construct_directed_cycle_labeling(1);
        FAIL("accepted n=1");
    } catch (const error& e) {
        CHECK(e.code() == errc::cycle_too_short);
    }

    for (int n = 3; n <= 60; ++n) {
        const auto [cycle, f] = construct_directed_cycle_labeling(n);
        CHECK(cycle.arc_count() == static_cast<std::size_t>(n));
        CHECK(is_friendly(f));
        const LambdaTriple t = lambda(cycle, f);
        CHECK(is_friendly(t));
        if (n % 6 == 0) {
            CHECK(t == LambdaTriple{n / 3, n / 3, n / 3});
        }
    }

    CHECK(lambda(construct_directed_cycle_labeling(6).first,
                 construct_directed_cycle_labeling(6).second) == LambdaTriple{2, 2, 2});
    CHECK(lambda(construct_directed_cycle_labeling(3).first,
                 construct_directed_cycle_labeling(3).second) == LambdaTriple{1, 1, 1});

    const auto [c4, f4] = construct_directed_cycle_labeling(4);
    const LambdaTriple t4 = lambda(c4, f4);
    CHECK(t4.total() == 4);
    std::vector<long long> parts{t4.alpha, t4.beta, t4.gamma};
    std::sort(parts.begin(), parts.end());
    CHECK(parts == std::vector<long long>{1, 1, 2});
}

TEST_CASE("directed path labelings match the figure values", "[constructions]") {
    const auto [p3, f3] = construct_directed_path_labeling(3);
    CHECK(p3 == directed_path(3));
    CHECK(f3 == VertexLabeling{0, 1, 0});
    CHECK(lambda(p3, f3) == LambdaTriple{1, 1, 0});

    const auto [p4, f4] = construct_directed_path_labeling(4);
    CHECK(f4 == VertexLabeling{0, 1, 1, 0});
    CHECK(lambda(p4, f4) == LambdaTriple{1, 1, 1});

    const auto [p1, f1] = construct_directed_path_labeling(1);
    CHECK(p1.order() == 1);
    CHECK(p1.arc_count() == 0);
    CHECK(f1 == VertexLabeling{0});
    CHECK(lambda(p1, f1) == LambdaTriple{0, 0, 0});

    for (int n = 1; n <= 60; ++n) {
        const auto [p, f] = construct_directed_path_labeling(n);
        CHECK(is_friendly(f));
        CHECK(is_friendly(lambda(p, f)));
    }
}

TEST_CASE("star analysis matches the closed form", "[constructions]") {
    CHECK_FALSE(analyze_star(10).exists);
    CHECK_FALSE(analyze_star(12).exists);
    CHECK(analyze_star(8).exists);
    CHECK(analyze_star(8).case_tag == "Case 1, subcase b");
    CHECK(analyze_star(10).case_tag == "Case 1, subcase a");
    CHECK(analyze_star(7).case_tag == "Case 2, subcase a");
    CHECK(analyze_star(2).case_tag == "trivial (n <= 3)");

    // n=8 witness realizes k=4, l=2: seven arcs split (2,2,3)
    const StarReport r8 = analyze_star(8);
    REQUIRE(r8.orientation.has_value());
    CHECK(*r8.lambda == LambdaTriple{2, 2, 3});

    for (int n = 1; n <= 13; ++n) {
        const StarReport r = analyze_star(n);
        CHECK(r.exists == (n <= 11 && n != 10));
        if (!r.exists) continue;
        REQUIRE(r.orientation.has_value());
        REQUIRE(r.labeling.has_value());
        REQUIRE(r.lambda.has_value());
        CHECK(is_friendly(*r.labeling));
        CHECK(is_friendly(*r.lambda));
        CHECK(lambda(*r.orientation, *r.labeling) == *r.lambda);
        for (const Arc& a : r.orientation->arcs()) CHECK((a.from == 0 || a.to == 0));
    }
}

TEST_CASE("star existence equals brute force over orientation classes", "[constructions][oracle]") {
    for (int n = 2; n <= 13; ++n) {
        bool brute = false;
        for (int inward = 0; inward < n && !brute; ++inward) {
            std::vector<Arc> arcs;
            for (int p = 1; p < n; ++p) arcs.push_back(p <= inward ? Arc{p, 0} : Arc{0, p});
            brute = is_23_cordial(Digraph(n, std::move(arcs)));
        }
        CHECK(brute == analyze_star(n).exists);
    }
}

TEST_CASE("out- and in-stars", "[constructions]") {
    CHECK(make_out_star(4) == Digraph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(reverse(make_out_star(5)) == make_in_star(5));
    for (int n = 2; n <= 3; ++n) {
        CHECK(is_23_cordial(make_out_star(n)));
        CHECK(is_23_cordial(make_in_star(n)));
    }
    for (int n = 4; n <= 9; ++n) {
        CHECK_FALSE(is_23_cordial(make_out_star(n)));
        CHECK_FALSE(is_23_cordial(make_in_star(n)));
    }
}

TEST_CASE("every friendly labeling of an out-star omits a nonzero arc label",
          "[constructions][property]") {
    for (int n = 4; n <= 9; ++n) {
        const Digraph star = make_out_star(n);
        for_each_friendly_labeling(n, false, [&](const VertexLabeling& f) {
            const auto labels = induce_arc_labels(star, f);
            const bool has_plus = std::find(labels.begin(), labels.end(), 1) != labels.end();
            const bool has_minus = std::find(labels.begin(), labels.end(), -1) != labels.end();
            CHECK_FALSE((has_plus && has_minus));
            return true;
        });
    }
}

TEST_CASE("small tree fixtures reproduce the figures", "[constructions]") {
    const auto fixtures = small_tree_fixtures();
    REQUIRE(fixtures.size() == 7);

    int labeled = 0;
    for (const TreeFixture& fx : fixtures) {
        if (!fx.labeling) {
            CHECK_FALSE(is_23_cordial(fx.digraph));
            continue;
        }
        ++labeled;
        CHECK(is_friendly(*fx.labeling));
        CHECK(is_friendly(lambda(fx.digraph, *fx.labeling)));
    }
    CHECK(labeled == 5);

    CHECK(fixtures[0].digraph == directed_path(3));
    CHECK(*fixtures[0].labeling == VertexLabeling{0, 1, 0});
    CHECK(induce_arc_labels(fixtures[1].digraph, *fixtures[1].labeling) ==
          std::vector<int>{1, 0});
    CHECK(lambda(fixtures[4].digraph, *fixtures[4].labeling) == LambdaTriple{1, 1, 1});
    CHECK(fixtures[6].digraph == make_in_star(4));
}
