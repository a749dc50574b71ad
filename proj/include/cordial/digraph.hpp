#pragma once

#include <compare>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cordial {

enum class errc {
    loop_arc,
    digon_pair,
    duplicate_arc,
    index_out_of_range,
    length_mismatch,
    cycle_too_short,
    size_cap,
    parse_error,
    fixture_mismatch,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct Arc {
    int from = 0;
    int to = 0;

    friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

inline std::string to_string(const Arc& a) {
    return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

/// Loop-free, digon-free directed graph on vertices 0..n-1 (a subgraph of a
/// tournament). Arcs keep insertion order; induced arc label sequences align
/// with it. Immutable after construction.
class Digraph {
public:
    Digraph() = default;

    Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
        if (n_ < 0)
            throw error(errc::index_out_of_range, "vertex count must be nonnegative");
        std::set<std::pair<int, int>> seen;
        for (const Arc& a : arcs_) {
            if (a.from < 0 || a.from >= n_ || a.to < 0 || a.to >= n_)
                throw error(errc::index_out_of_range,
                            "arc " + to_string(a) + " out of range for n=" + std::to_string(n_));
            if (a.from == a.to)
                throw error(errc::loop_arc, "loop arc " + to_string(a));
            if (seen.count({a.to, a.from}))
                throw error(errc::digon_pair, "digon pair at arc " + to_string(a));
            if (!seen.insert({a.from, a.to}).second)
                throw error(errc::duplicate_arc, "duplicate arc " + to_string(a));
        }
    }

    int order() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Vertex labeling: one {0,1} entry per vertex.
using VertexLabeling = std::vector<int>;

/// Counts of arcs labeled +1, -1 and 0 under the induced arc labeling.
struct LambdaTriple {
    long long alpha = 0;
    long long beta = 0;
    long long gamma = 0;

    long long total() const noexcept { return alpha + beta + gamma; }

    friend constexpr auto operator<=>(const LambdaTriple&, const LambdaTriple&) = default;
};

struct CordialityResult {
    bool cordial = false;
    std::optional<VertexLabeling> witness;   // present iff cordial
    std::optional<LambdaTriple> lambda;      // lambda of the witness
};

namespace detail {

inline void require_length(const Digraph& d, const VertexLabeling& f) {
    if (static_cast<int>(f.size()) != d.order())
        throw error(errc::length_mismatch,
                    "labeling length " + std::to_string(f.size()) +
                        " does not match vertex count " + std::to_string(d.order()));
}

}  // namespace detail

/// Induced arc labels g(u->v) = f(v) - f(u), aligned with d.arcs().
inline std::vector<int> induce_arc_labels(const Digraph& d, const VertexLabeling& f) {
    detail::require_length(d, f);
    std::vector<int> out;
    out.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) out.push_back(f[a.to] - f[a.from]);
    return out;
}

inline LambdaTriple lambda(const Digraph& d, const VertexLabeling& f) {
    detail::require_length(d, f);
    LambdaTriple t;
    for (const Arc& a : d.arcs()) {
        const int g = f[a.to] - f[a.from];
        if (g > 0)
            ++t.alpha;
        else if (g < 0)
            ++t.beta;
        else
            ++t.gamma;
    }
    return t;
}

/// A vertex labeling is friendly when its 0- and 1-counts differ by at most 1.
inline bool is_friendly(const VertexLabeling& f) {
    long long ones = 0;
    for (int x : f) ones += (x != 0);
    const long long zeros = static_cast<long long>(f.size()) - ones;
    return std::llabs(zeros - ones) <= 1;
}

/// A triple is friendly when the three counts pairwise differ by at most 1.
inline bool is_friendly(const LambdaTriple& t) {
    return std::llabs(t.alpha - t.beta) <= 1 && std::llabs(t.alpha - t.gamma) <= 1 &&
           std::llabs(t.beta - t.gamma) <= 1;
}

/// Digraph with every arc direction flipped.
inline Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) arcs.push_back({a.to, a.from});
    return Digraph(d.order(), std::move(arcs));
}

/// Labeling with every 0 and 1 swapped.
inline VertexLabeling complement_labeling(const VertexLabeling& f) {
    VertexLabeling out;
    out.reserve(f.size());
    for (int x : f) out.push_back(x != 0 ? 0 : 1);
    return out;
}

}  // namespace cordial
