#pragma once

#include <cstdint>
#include <utility>

#include "cordial/digraph.hpp"

namespace cordial {

namespace detail {

// One-counts a friendly labeling of length n may end with.
struct OnesRange {
    int lo = 0;
    int hi = 0;
};

inline OnesRange friendly_ones_range(int n) {
    if (n % 2 == 0) return {n / 2, n / 2};
    return {n / 2, n / 2 + 1};
}

template <typename Fn>
bool friendly_rec(VertexLabeling& buf, int pos, int ones, OnesRange range, Fn& fn) {
    const int n = static_cast<int>(buf.size());
    if (pos == n) return fn(const_cast<const VertexLabeling&>(buf));
    const int remaining = n - pos - 1;
    if (ones + remaining >= range.lo) {
        buf[pos] = 0;
        if (!friendly_rec(buf, pos + 1, ones, range, fn)) return false;
    }
    if (ones + 1 <= range.hi) {
        buf[pos] = 1;
        if (!friendly_rec(buf, pos + 1, ones + 1, range, fn)) return false;
    }
    return true;
}

inline unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned long long>(n - k + i) / i;
    return r;
}

}  // namespace detail

/// Streams every friendly labeling of length n in lexicographic ascending
/// order. With fix_first_zero (and n >= 1) only labelings starting with 0 are
/// produced; complementation makes this a lossless representative set.
/// Fn: bool(const VertexLabeling&), return false to stop early.
/// Returns false when the visitor stopped the stream.
template <typename Fn>
bool for_each_friendly_labeling(int n, bool fix_first_zero, Fn&& fn) {
    if (n < 0) throw error(errc::index_out_of_range, "negative labeling length");
    VertexLabeling buf(n, 0);
    auto range = detail::friendly_ones_range(n);
    if (n == 0) return fn(const_cast<const VertexLabeling&>(buf));
    if (fix_first_zero) {
        buf[0] = 0;
        return detail::friendly_rec(buf, 1, 0, range, fn);
    }
    return detail::friendly_rec(buf, 0, 0, range, fn);
}

inline std::vector<VertexLabeling> friendly_labelings(int n, bool fix_first_zero) {
    std::vector<VertexLabeling> out;
    for_each_friendly_labeling(n, fix_first_zero, [&](const VertexLabeling& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

/// Total number of friendly labelings of length n (no pruning).
inline unsigned long long friendly_labeling_count(int n) {
    if (n == 0) return 1;
    unsigned long long c = detail::binomial(n, n / 2);
    if (n % 2 != 0) c *= 2;
    return c;
}

/// Decides (2,3)-cordiality. When cordial, the witness is the
/// lexicographically least friendly labeling whose induced triple is
/// friendly (the least witness always starts with 0 since the complement of
/// a witness is a witness).
inline CordialityResult find_cordial_labeling(const Digraph& d) {
    CordialityResult result;
    for_each_friendly_labeling(d.order(), true, [&](const VertexLabeling& f) {
        LambdaTriple t = lambda(d, f);
        if (!is_friendly(t)) return true;
        result = CordialityResult{true, f, t};
        return false;
    });
    return result;
}

inline bool is_23_cordial(const Digraph& d) { return find_cordial_labeling(d).cordial; }

/// Number of friendly labelings (full space, no pruning) inducing a friendly
/// triple. Even for n >= 1 whenever nonzero, by complement pairing.
inline long long count_cordial_labelings(const Digraph& d) {
    long long count = 0;
    for_each_friendly_labeling(d.order(), false, [&](const VertexLabeling& f) {
        if (is_friendly(lambda(d, f))) ++count;
        return true;
    });
    return count;
}

struct SearchStats {
    long long labelings_examined = 0;
    long long witnesses_found = 0;
    long long pruned_by_complement = 0;
};

/// Full pruned scan (no early exit) with counters, for regression checks.
inline SearchStats search_stats(const Digraph& d) {
    SearchStats s;
    for_each_friendly_labeling(d.order(), true, [&](const VertexLabeling& f) {
        ++s.labelings_examined;
        if (is_friendly(lambda(d, f))) ++s.witnesses_found;
        return true;
    });
    s.pruned_by_complement =
        static_cast<long long>(friendly_labeling_count(d.order())) - s.labelings_examined;
    return s;
}

}  // namespace cordial
