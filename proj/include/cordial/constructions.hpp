#pragma once

#include <string>
#include <utility>

#include "cordial/digraph.hpp"
#include "cordial/search.hpp"

namespace cordial {

/// Consistently oriented path 0 -> 1 -> ... -> n-1.
inline Digraph directed_path(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    std::vector<Arc> arcs;
    arcs.reserve(n > 0 ? n - 1 : 0);
    for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
    return Digraph(n, std::move(arcs));
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0; arc i runs i -> (i+1) mod n.
inline Digraph directed_cycle(int n) {
    if (n < 3) throw error(errc::cycle_too_short, "cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Arc> arcs;
    arcs.reserve(n);
    for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
    return Digraph(n, std::move(arcs));
}

namespace detail {

// On a directed cycle the +1 and -1 arc counts both equal the number of
// maximal 1-runs, so a labeling with t runs of each value and t = round(n/3)
// lands exactly on the friendly triple (t, t, n-2t).
inline VertexLabeling balanced_run_cycle_labeling(int n) {
    const int t = (n + 1) / 3;
    const int zeros = (n + 1) / 2;
    const int ones = n / 2;
    VertexLabeling f;
    f.reserve(n);
    for (int j = 0; j < t; ++j) {
        const int z = zeros / t + (j < zeros % t ? 1 : 0);
        const int o = ones / t + (j < ones % t ? 1 : 0);
        f.insert(f.end(), z, 0);
        f.insert(f.end(), o, 1);
    }
    return f;
}

// Alternating block pattern for n = 6l: first 2k vertices alternate 0,1
// (k = n/3), then a run of l ones and l zeros closes the cycle.
inline VertexLabeling alternating_block_cycle_labeling(int n) {
    const int k = n / 3;
    const int l = n / 6;
    VertexLabeling f(n, 0);
    for (int i = 0; i < 2 * k; ++i) f[i] = i % 2;
    for (int i = 2 * k; i < 2 * k + l; ++i) f[i] = 1;
    return f;
}

}  // namespace detail

/// Directed n-cycle together with a (2,3)-cordial labeling. For n divisible
/// by 6 the labeling follows the alternating block pattern, which induces
/// exactly (n/3, n/3, n/3); other lengths use the balanced-run labeling.
/// Every output is re-verified by the checker before returning.
inline std::pair<Digraph, VertexLabeling> construct_directed_cycle_labeling(int n) {
    Digraph c = directed_cycle(n);
    VertexLabeling f = (n % 6 == 0) ? detail::alternating_block_cycle_labeling(n)
                                    : detail::balanced_run_cycle_labeling(n);
    if (!is_friendly(f) || !is_friendly(lambda(c, f)))
        throw std::logic_error("cycle labeling failed verification at n=" + std::to_string(n));
    return {std::move(c), std::move(f)};
}

/// Directed n-path with a (2,3)-cordial labeling, obtained by deleting one
/// arc of the labeled n-cycle (an arc from a maximal label class keeps the
/// triple friendly) and reading the cycle from the deleted arc's head.
inline std::pair<Digraph, VertexLabeling> construct_directed_path_labeling(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    if (n == 1) return {Digraph(1, {}), VertexLabeling{0}};
    if (n == 2) return {directed_path(2), VertexLabeling{0, 1}};

    auto [cycle, f] = construct_directed_cycle_labeling(n);
    const std::vector<int> g = induce_arc_labels(cycle, f);
    const LambdaTriple t = lambda(cycle, f);

    const long long max_count = std::max({t.alpha, t.beta, t.gamma});
    int target = 0;  // prefer deleting a 0-arc, then +1, then -1
    if (t.gamma == max_count)
        target = 0;
    else if (t.alpha == max_count)
        target = 1;
    else
        target = -1;

    int deleted = 0;
    while (g[deleted] != target) ++deleted;

    VertexLabeling pf(n);
    for (int i = 0; i < n; ++i) pf[i] = f[(deleted + 1 + i) % n];

    Digraph p = directed_path(n);
    if (!is_friendly(pf) || !is_friendly(lambda(p, pf)))
        throw std::logic_error("path labeling failed verification at n=" + std::to_string(n));
    return {std::move(p), std::move(pf)};
}

/// Star with center 0 and all arcs leaving the center.
inline Digraph make_out_star(int n) {
    if (n < 1) throw std::invalid_argument("star order must be >= 1");
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.push_back({0, i});
    return Digraph(n, std::move(arcs));
}

/// Star with center 0 and all arcs entering the center.
inline Digraph make_in_star(int n) {
    if (n < 1) throw std::invalid_argument("star order must be >= 1");
    std::vector<Arc> arcs;
    for (int i = 1; i < n; ++i) arcs.push_back({i, 0});
    return Digraph(n, std::move(arcs));
}

struct StarReport {
    int n = 0;
    bool exists = false;
    std::optional<Digraph> orientation;
    std::optional<VertexLabeling> labeling;
    std::optional<LambdaTriple> lambda;
    std::string case_tag;
};

namespace detail {

inline std::string star_case_tag(int n) {
    if (n <= 3) return "trivial (n <= 3)";
    const int m = n - 1;
    const char sub = m % 3 == 0 ? 'a' : m % 3 == 1 ? 'b' : 'c';
    return std::string("Case ") + (n % 2 == 0 ? "1" : "2") + ", subcase " + sub;
}

}  // namespace detail

/// Closed-form existence of a (2,3)-cordial star orientation on n vertices,
/// plus an explicit witnessing orientation and labeling when one exists.
/// Center is vertex 0 labeled 0; of the 1-labeled pendants, half the arcs
/// point outward and half inward, so the triple is (ceil, floor, zeros).
inline StarReport analyze_star(int n) {
    if (n < 1) throw std::invalid_argument("star order must be >= 1");
    StarReport report;
    report.n = n;
    report.exists = (n <= 11 && n != 10);
    report.case_tag = detail::star_case_tag(n);
    if (!report.exists) return report;
    if (n == 1) {
        report.orientation = Digraph(1, {});
        report.labeling = VertexLabeling{0};
        report.lambda = LambdaTriple{};
        return report;
    }

    std::vector<int> ones_candidates;
    if (n % 2 == 0)
        ones_candidates = {n / 2};
    else
        ones_candidates = {(n + 1) / 2, (n - 1) / 2};

    for (int ones : ones_candidates) {
        const int zeros_pendant = n - 1 - ones;
        const long long out_arcs = (ones + 1) / 2;
        const long long in_arcs = ones / 2;
        const LambdaTriple t{out_arcs, in_arcs, zeros_pendant};
        if (!is_friendly(t)) continue;

        VertexLabeling f(n, 0);
        std::vector<Arc> arcs;
        for (int p = 1; p <= ones; ++p) {
            f[p] = 1;
            if (p <= out_arcs)
                arcs.push_back({0, p});
            else
                arcs.push_back({p, 0});
        }
        for (int p = ones + 1; p < n; ++p) arcs.push_back({0, p});

        Digraph d(n, std::move(arcs));
        if (!is_friendly(f) || cordial::lambda(d, f) != t)
            throw std::logic_error("star construction failed verification at n=" +
                                   std::to_string(n));
        report.orientation = std::move(d);
        report.labeling = std::move(f);
        report.lambda = t;
        return report;
    }
    throw std::logic_error("star closed form and construction disagree at n=" +
                           std::to_string(n));
}

struct TreeFixture {
    std::string name;
    Digraph digraph;
    std::optional<VertexLabeling> labeling;  // absent for the non-cordial trees
};

/// The labeled 3-path orientations, the three labeled 4-trees and the two
/// unlabeled non-cordial 4-trees used as regression fixtures.
inline std::vector<TreeFixture> small_tree_fixtures() {
    std::vector<TreeFixture> out;
    out.push_back({"path3_ff", Digraph(3, {{0, 1}, {1, 2}}), VertexLabeling{0, 1, 0}});
    out.push_back({"path3_fb", Digraph(3, {{0, 1}, {2, 1}}), VertexLabeling{0, 1, 1}});
    out.push_back({"path4_fff", Digraph(4, {{0, 1}, {1, 2}, {2, 3}}), VertexLabeling{0, 1, 1, 0}});
    out.push_back({"path4_fbf", Digraph(4, {{0, 1}, {2, 1}, {2, 3}}), VertexLabeling{0, 1, 1, 0}});
    out.push_back({"star4_mixed", Digraph(4, {{1, 0}, {2, 0}, {0, 3}}), VertexLabeling{1, 0, 1, 0}});
    out.push_back({"path4_ffb", Digraph(4, {{0, 1}, {1, 2}, {3, 2}}), std::nullopt});
    out.push_back({"star4_in", Digraph(4, {{1, 0}, {2, 0}, {3, 0}}), std::nullopt});
    return out;
}

}  // namespace cordial
