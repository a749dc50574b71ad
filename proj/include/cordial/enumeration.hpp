#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "cordial/digraph.hpp"

namespace cordial {

struct Edge {
    int u = 0;
    int v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph; edges are normalized to u < v and stored in
/// lexicographic order, which fixes the direction-bit semantics below.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    UndirectedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw error(errc::index_out_of_range, "vertex count must be nonnegative");
        for (Edge& e : edges_) {
            if (e.u == e.v)
                throw error(errc::loop_arc, "loop edge (" + std::to_string(e.u) + "," +
                                                std::to_string(e.v) + ")");
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw error(errc::index_out_of_range,
                            "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                ") out of range for n=" + std::to_string(n_));
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw error(errc::duplicate_arc, "duplicate edge");
    }

    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

inline int max_degree(const UndirectedGraph& g) {
    std::vector<int> deg(g.order(), 0);
    for (const Edge& e : g.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

/// Arc-direction assignment over a fixed skeleton: bit j = 0 orients edge j
/// as u -> v for the stored pair (u < v), bit j = 1 the other way.
struct Orientation {
    UndirectedGraph skeleton;
    std::vector<std::uint8_t> direction_bits;
};

inline Digraph to_digraph(const Orientation& o) {
    if (o.direction_bits.size() != o.skeleton.edge_count())
        throw error(errc::length_mismatch, "direction bit count does not match edge count");
    std::vector<Arc> arcs;
    arcs.reserve(o.skeleton.edge_count());
    for (std::size_t j = 0; j < o.skeleton.edge_count(); ++j) {
        const Edge& e = o.skeleton.edges()[j];
        arcs.push_back(o.direction_bits[j] ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    return Digraph(o.skeleton.order(), std::move(arcs));
}

namespace detail {

inline std::vector<std::uint8_t> bits_of_mask(std::uint64_t mask, std::size_t m) {
    std::vector<std::uint8_t> bits(m);
    for (std::size_t j = 0; j < m; ++j)
        bits[j] = static_cast<std::uint8_t>((mask >> (m - 1 - j)) & 1u);
    return bits;
}

}  // namespace detail

/// Streams all 2^m orientations of g as digraphs, in direction-bit
/// lexicographic order (edge 0 is the most significant bit).
/// Fn: bool(const Digraph&), return false to stop early.
template <typename Fn>
bool for_each_orientation(const UndirectedGraph& g, Fn&& fn) {
    const std::size_t m = g.edge_count();
    if (m >= 63) throw error(errc::size_cap, "too many edges to enumerate orientations");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Orientation o{g, detail::bits_of_mask(mask, m)};
        if (!fn(to_digraph(o))) return false;
    }
    return true;
}

inline std::vector<Digraph> orientations(const UndirectedGraph& g) {
    std::vector<Digraph> out;
    for_each_orientation(g, [&](const Digraph& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

/// Path skeleton on n vertices: edges {i, i+1}.
inline UndirectedGraph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return UndirectedGraph(n, std::move(edges));
}

/// One representative per orientation class of the n-path under end-to-end
/// reflection (reverse vertex order and arc directions), i.e. under reversal
/// of the direction-bit vector. Representative = lexicographically least bit
/// vector of the class; classes have size 1 or 2.
inline std::vector<Digraph> path_orientations_up_to_reversal(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    const UndirectedGraph g = path_graph(n);
    const std::size_t m = g.edge_count();
    std::vector<Digraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::uint64_t reflected = 0;
        for (std::size_t j = 0; j < m; ++j)
            if ((mask >> j) & 1u) reflected |= std::uint64_t{1} << (m - 1 - j);
        if (mask <= reflected)
            out.push_back(to_digraph(Orientation{g, detail::bits_of_mask(mask, m)}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Canonical forms.
//
// Trees use the classic center-rooted encoding: enc(v) = "(" + the sorted
// encodings of v's subtrees + ")". Two trees are isomorphic iff their
// encodings match, and a preorder walk that visits children in encoding
// order relabels any tree to a unique canonical representative.
// Tournaments are small enough (n <= 5) for the blunt instrument: the
// lexicographically least adjacency-matrix bit-string over all vertex
// permutations.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<int>> adjacency_lists(const UndirectedGraph& g) {
    std::vector<std::vector<int>> adj(g.order());
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

inline void require_tree(const UndirectedGraph& g) {
    const int n = g.order();
    if (n < 1 || g.edge_count() != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("not a tree: wrong edge count");
    // connectivity: BFS from 0
    auto adj = adjacency_lists(g);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    if (visited != n) throw std::invalid_argument("not a tree: disconnected");
}

// Centers of a tree by leaf peeling (one or two of them).
inline std::vector<int> tree_centers(const UndirectedGraph& g) {
    const int n = g.order();
    if (n == 1) return {0};
    auto adj = adjacency_lists(g);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<int> layer;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int left = n;
    while (left > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = 1;
            --left;
            for (int w : adj[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

inline std::string tree_encoding(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child_encodings;
    for (int w : adj[v])
        if (w != parent) child_encodings.push_back(tree_encoding(adj, w, v));
    std::sort(child_encodings.begin(), child_encodings.end());
    std::string out = "(";
    for (const std::string& c : child_encodings) out += c;
    out += ")";
    return out;
}

inline void tree_relabel_walk(const std::vector<std::vector<int>>& adj, int v, int parent,
                              std::vector<int>& new_id, int& next,
                              std::vector<Edge>& edges_out) {
    new_id[v] = next++;
    std::vector<std::pair<std::string, int>> children;
    for (int w : adj[v])
        if (w != parent) children.emplace_back(tree_encoding(adj, w, v), w);
    std::sort(children.begin(), children.end());
    for (const auto& [enc, w] : children) {
        edges_out.push_back({new_id[v], 0});  // to fill after child gets its id
        const std::size_t slot = edges_out.size() - 1;
        tree_relabel_walk(adj, w, v, new_id, next, edges_out);
        edges_out[slot].v = new_id[w];
    }
}

}  // namespace detail

/// Canonical key of a free tree; equal keys iff isomorphic.
inline std::string canonical_tree_key(const UndirectedGraph& g) {
    detail::require_tree(g);
    auto adj = detail::adjacency_lists(g);
    auto centers = detail::tree_centers(g);
    std::string best;
    for (int c : centers) {
        std::string enc = detail::tree_encoding(adj, c, -1);
        if (best.empty() || enc < best) best = std::move(enc);
    }
    return best;
}

/// Canonically relabeled copy of a free tree: isomorphic inputs map to the
/// identical labeled graph.
inline UndirectedGraph canonical_tree(const UndirectedGraph& g) {
    detail::require_tree(g);
    auto adj = detail::adjacency_lists(g);
    auto centers = detail::tree_centers(g);
    int root = centers[0];
    if (centers.size() == 2) {
        const std::string e0 = detail::tree_encoding(adj, centers[0], -1);
        const std::string e1 = detail::tree_encoding(adj, centers[1], -1);
        if (e1 < e0) root = centers[1];
    }
    std::vector<int> new_id(g.order(), -1);
    std::vector<Edge> edges;
    int next = 0;
    detail::tree_relabel_walk(adj, root, -1, new_id, next, edges);
    return UndirectedGraph(g.order(), std::move(edges));
}

/// One representative per isomorphism class of free trees on n vertices,
/// canonically labeled, ordered by canonical key. Grown by leaf attachment
/// with canonical-form dedup; desk-scale cap at n = 12.
inline std::vector<UndirectedGraph> free_trees(int n) {
    if (n < 1 || n > 12)
        throw error(errc::size_cap, "free_trees supports 1 <= n <= 12, got " + std::to_string(n));
    std::map<std::string, UndirectedGraph> level;
    level.emplace(canonical_tree_key(UndirectedGraph(1, {})), UndirectedGraph(1, {}));
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, UndirectedGraph> next;
        for (const auto& [key, tree] : level) {
            for (int v = 0; v < m - 1; ++v) {
                std::vector<Edge> edges = tree.edges();
                edges.push_back({v, m - 1});
                UndirectedGraph candidate(m, std::move(edges));
                std::string ck = canonical_tree_key(candidate);
                if (!next.count(ck)) next.emplace(std::move(ck), canonical_tree(candidate));
            }
        }
        level = std::move(next);
    }
    std::vector<UndirectedGraph> out;
    out.reserve(level.size());
    for (auto& [key, tree] : level) out.push_back(std::move(tree));
    return out;
}

namespace detail {

inline std::string tournament_key(const Digraph& d, const std::vector<int>& perm) {
    const int n = d.order();
    std::string key(static_cast<std::size_t>(n) * n, '0');
    for (const Arc& a : d.arcs()) key[perm[a.from] * n + perm[a.to]] = '1';
    return key;
}

}  // namespace detail

/// Canonical representative of a tournament's isomorphism class: the digraph
/// decoded from the least adjacency bit-string over all vertex permutations.
inline Digraph canonical_tournament(const Digraph& d) {
    const int n = d.order();
    if (d.arc_count() != static_cast<std::size_t>(n) * (n - 1) / 2)
        throw std::invalid_argument("not a tournament: wrong arc count");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string key = detail::tournament_key(d, perm);
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (best[u * n + v] == '1') arcs.push_back({u, v});
    return Digraph(n, std::move(arcs));
}

/// One representative per isomorphism class of tournaments on n vertices,
/// ordered by canonical form. Desk-scale cap: 2 <= n <= 5.
inline std::vector<Digraph> tournaments(int n) {
    if (n < 2 || n > 5)
        throw error(errc::size_cap, "tournaments supports 2 <= n <= 5, got " + std::to_string(n));
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const std::size_t m = pairs.size();
    std::map<std::string, Digraph> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Arc> arcs;
        arcs.reserve(m);
        for (std::size_t j = 0; j < m; ++j) {
            const Edge& e = pairs[j];
            arcs.push_back(((mask >> (m - 1 - j)) & 1u) ? Arc{e.v, e.u} : Arc{e.u, e.v});
        }
        Digraph t(n, std::move(arcs));
        Digraph canon = canonical_tournament(t);
        std::string key = detail::tournament_key(canon, [&] {
            std::vector<int> identity(n);
            std::iota(identity.begin(), identity.end(), 0);
            return identity;
        }());
        classes.emplace(std::move(key), std::move(canon));
    }
    std::vector<Digraph> out;
    out.reserve(classes.size());
    for (auto& [key, t] : classes) out.push_back(std::move(t));
    return out;
}

/// Ascending out-degree sequence.
inline std::vector<int> score_vector(const Digraph& d) {
    std::vector<int> out(d.order(), 0);
    for (const Arc& a : d.arcs()) ++out[a.from];
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cordial
