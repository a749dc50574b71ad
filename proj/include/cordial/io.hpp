#pragma once

#include <istream>
#include <sstream>
#include <string>

#include "cordial/digraph.hpp"

namespace cordial {

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline std::vector<long long> parse_ints(const std::string& line, int line_no,
                                         std::size_t expected) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long x = 0;
    while (in >> x) out.push_back(x);
    if (!in.eof()) {
        in.clear();
        std::string rest;
        in >> rest;
        throw error(errc::parse_error,
                    "line " + std::to_string(line_no) + ": unexpected token '" + rest + "'");
    }
    if (out.size() != expected)
        throw error(errc::parse_error, "line " + std::to_string(line_no) + ": expected " +
                                           std::to_string(expected) + " integers, got " +
                                           std::to_string(out.size()));
    return out;
}

}  // namespace detail

/// Parses the digraph text format: a header line "n m" followed by m lines
/// "u v" (arc u -> v, 0-indexed). Lines starting with '#' are comments.
/// Errors name the offending line.
inline Digraph parse_digraph_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    int header_line = 0;
    long long n = -1, m = -1;
    std::vector<Arc> arcs;
    std::vector<int> arc_lines;

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_blank_or_comment(line)) continue;
        if (n < 0) {
            auto header = detail::parse_ints(line, line_no, 2);
            n = header[0];
            m = header[1];
            header_line = line_no;
            if (n < 0 || m < 0)
                throw error(errc::parse_error,
                            "line " + std::to_string(line_no) + ": negative count");
            continue;
        }
        if (static_cast<long long>(arcs.size()) == m)
            throw error(errc::parse_error,
                        "line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                            " arc lines");
        auto pair = detail::parse_ints(line, line_no, 2);
        arcs.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
        arc_lines.push_back(line_no);
    }
    if (n < 0) throw error(errc::parse_error, "line " + std::to_string(line_no + 1) +
                                                  ": missing 'n m' header");
    if (static_cast<long long>(arcs.size()) != m)
        throw error(errc::parse_error, "line " + std::to_string(line_no + 1) + ": expected " +
                                           std::to_string(m) + " arcs, got " +
                                           std::to_string(arcs.size()));

    // validate arc by arc so structural errors can name their line
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        try {
            std::vector<Arc> prefix(arcs.begin(), arcs.begin() + i + 1);
            Digraph(static_cast<int>(n), std::move(prefix));
        } catch (const error& e) {
            if (e.code() == errc::parse_error) throw;
            throw error(e.code(),
                        "line " + std::to_string(arc_lines[i]) + ": " + e.what());
        }
    }
    (void)header_line;
    return Digraph(static_cast<int>(n), std::move(arcs));
}

inline Digraph parse_digraph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_digraph_text(in);
}

inline std::string to_text(const Digraph& d) {
    std::string out = std::to_string(d.order()) + " " + std::to_string(d.arc_count()) + "\n";
    for (const Arc& a : d.arcs())
        out += std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
    return out;
}

/// Graphviz export. Vertices are v0..v{n-1}; with a labeling, vertices carry
/// their {0,1} label and arcs their induced {1,0,-1} label.
inline std::string to_dot(const Digraph& d, const VertexLabeling* labels = nullptr) {
    if (labels) detail::require_length(d, *labels);
    std::string out = "digraph cordial {\n";
    for (int v = 0; v < d.order(); ++v) {
        out += "  v" + std::to_string(v);
        if (labels) out += " [label=\"" + std::to_string((*labels)[v]) + "\"]";
        out += ";\n";
    }
    for (const Arc& a : d.arcs()) {
        out += "  v" + std::to_string(a.from) + " -> v" + std::to_string(a.to);
        if (labels)
            out += " [label=\"" + std::to_string((*labels)[a.to] - (*labels)[a.from]) + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace cordial
