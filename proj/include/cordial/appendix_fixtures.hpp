#pragma once

// Bundled labeling tables for every orientation of the 5-, 6- and 7-paths,
// one row per orientation. Row format interleaves vertex labels with arc
// arrows, e.g. "0>1<1>0>0": digits are the {0,1} vertex labels read left to
// right, '>' is an arc toward the higher-index vertex, '<' the reverse.
//
// The tables are data under test: validate_appendix() recomputes every row
// and itemizes rows that fail their own arithmetic instead of fixing them.

#include <cstddef>
#include <span>

namespace cordial::appendix_tables {

inline constexpr const char* k5PathRows[] = {
    "0>1>1>0>0", "0>1<1>0>0", "0>1>0<0>1", "0>1>1>0<0",
    "0>1<1<1>0", "0>1<1>0<0", "0>1>1<0<1", "0>1<0<0<1",
    "1<0>0>1>0", "1<0<0>1>0", "1<0>0<1>1", "1<0>0>0<1",
    "1<0<0<1>1", "1<0<0>0<1", "1<0>0<1<1", "1<0<0<1<1",
};

inline constexpr const char* k6PathRows[] = {
    "0>1>1>0>0>1", "0>1<1>0>0>1", "1>0<0<1>1>0", "1<0>0<1>1>0",
    "0>1>1>0<0>1", "0>1<1>0<0>1", "1<0<0<1<1>0", "1<0>0<1<1>0",
    "0>1>0<0>1>1", "0>1<0<1>1>0", "1<0<0>1>1>0", "1<0>1>1>0>0",
    "0>0>1<0<1>1", "0>1<0<0<1>1", "1<1<0>0<1>0", "1<0>0>1<1>0",
    "0>1>1>0>0<1", "0>1<1>0>0<1", "1>0<0<1>1<0", "1<0>0<1>1<0",
    "0>1>1>0<0<1", "0>1<1>0<0<1", "1<0<0<1<1<0", "1<0>0<1<1<0",
    "0>1>0<0>1<1", "0>1<0<1>1<1", "1<0<0>1>1<0", "1<0>1>1>0<1",
    "0>0>1<0<1<1", "0>1<0<0<1<1", "1<1<0>0<1<0", "1<0>0>1<1<0",
};

inline constexpr const char* k7PathRows[] = {
    "0>1>1>0>0>1>0", "0>1<1>0>0>1>0", "0<1<1<0>0>1>0", "0<1>1<0>0>1>0",
    "0>1>1>0<0>1>0", "0>1<1>0<0>1>0", "0<1<1<0<0>1>0", "0<1>1<0<0>1>0",
    "0>1>1>0>1>0<0", "0>1<1>0>1>0<0", "0<1<1<0>1>0<0", "0<1>1<0>1>0<0",
    "0>1>1>0<1>1<0", "0>1<1>0<1>1<0", "0<1<1<0<1>1<0", "0<1>1<0<1>1<0",
    "0>1>0<0>1>1>0", "0>1<0<1>1>0>0", "0<1<0>0>1>1>0", "0<0>1>0>1>1>0",
    "0>1>1<0<1>1>0", "0>1<0<0<1>1>0", "1<0<0>0<1>0>1", "1<0>0>0<1>0>1",
    "0>1>0<1>1>1<0", "0>0<1<1>0>1<0", "0<0<1>1>0>1<0", "0<1>1>0>0>1<0",
    "0>1>1<0<1>0<0", "0>1<0<1<1>0<0", "1<0<0>1<1>0<1", "1<0>0>1<1>0<1",
    "0>0>1>0>1<1>0", "0>1<1>0>1<1>0", "0<0<1<0>1<1>0", "0<1>1<0>1<1>0",
    "0>1>1>0<1<0>0", "0>1<1>0<1<0>0", "0<1<0<1<1<0>0", "0<1>1<0<1<0>0",
    "0>1>1>0>0<1<0", "0>1<1>0>0<1<0", "0<1<1<0>0<1<0", "0<1>1<0>0<1<0",
    "0>1>1>0<0<1<0", "0>1<1>0<0<1<0", "0<1<1<0<0<1<0", "0<1>1<0<0<1<0",
    "0>1>0<0>1<1>0", "0>0<1<0>1<1>0", "0<1<1>0>1<0>0", "0<1>1>0>1<0>0",
    "0>1>1<0<0<1>0", "0>1<0<0<1<1>0", "0<1<0>1<1<1>0", "0<1>0>1<1<0>0",
    "0>0>1<1>0<1<0", "0>1<1<1>0<1<0", "0<1<1>0>1<1<0", "0<1>1>0>1<1<0",
    "0>1>0<0<1<1<0", "0>0<1<0<1<1<0", "0<0<1>1<0<1<0", "0<1>0>1<1<0<0",
};

inline std::span<const char* const> rows_for(int n) {
    switch (n) {
        case 5: return k5PathRows;
        case 6: return k6PathRows;
        case 7: return k7PathRows;
        default: return {};
    }
}

}  // namespace cordial::appendix_tables
