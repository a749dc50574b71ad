#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "cordial/appendix_fixtures.hpp"
#include "cordial/constructions.hpp"
#include "cordial/enumeration.hpp"
#include "cordial/search.hpp"

namespace cordial {

struct CampaignFailure {
    std::string instance;
    std::string detail;

    friend auto operator<=>(const CampaignFailure&, const CampaignFailure&) = default;
};

struct CampaignReport {
    std::string campaign;
    std::vector<std::pair<std::string, std::string>> parameters;
    long long instances_checked = 0;
    std::vector<CampaignFailure> failures;
    double elapsed_seconds = 0.0;  // informational; excluded from JSON

    bool pass() const noexcept { return failures.empty(); }
};

/// Worker count: CORDIAL_WORKERS if set, otherwise available parallelism.
inline int worker_count() {
    if (const char* env = std::getenv("CORDIAL_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

namespace detail {

// Index-addressed fan-out: out[i] = fn(i). Results are merged by index, so
// the output is identical for any worker count.
template <typename R, typename Fn>
std::vector<R> parallel_map(std::size_t count, int workers, Fn&& fn) {
    std::vector<R> out(count);
    if (count == 0) return out;
    const int w = std::clamp<int>(workers, 1, static_cast<int>(count));
    if (w == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                    out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

class CampaignTimer {
public:
    explicit CampaignTimer(CampaignReport& report)
        : report_(report), start_(std::chrono::steady_clock::now()) {}

    ~CampaignTimer() {
        report_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    CampaignReport& report_;
    std::chrono::steady_clock::time_point start_;
};

inline void finalize_failures(CampaignReport& report) {
    std::sort(report.failures.begin(), report.failures.end());
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// Star on n vertices, center 0, with the first `inward` pendant arcs pointing
// at the center. Pendants are interchangeable, so these n classes cover all
// 2^(n-1) star orientations for cordiality purposes.
inline Digraph star_with_inward(int n, int inward) {
    std::vector<Arc> arcs;
    for (int p = 1; p < n; ++p)
        arcs.push_back(p <= inward ? Arc{p, 0} : Arc{0, p});
    return Digraph(n, std::move(arcs));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Arrow patterns: an n-path orientation written as n-1 characters, '>' for an
// arc toward the higher-index vertex and '<' for the reverse.
// ---------------------------------------------------------------------------

inline std::string pattern_from_mask(int n, std::uint64_t mask) {
    const int m = n - 1;
    std::string out(m, '>');
    for (int j = 0; j < m; ++j)
        if ((mask >> (m - 1 - j)) & 1u) out[j] = '<';
    return out;
}

inline Digraph pattern_digraph(const std::string& pattern) {
    const int n = static_cast<int>(pattern.size()) + 1;
    std::vector<Arc> arcs;
    arcs.reserve(pattern.size());
    for (int j = 0; j < n - 1; ++j) {
        if (pattern[j] == '>')
            arcs.push_back({j, j + 1});
        else if (pattern[j] == '<')
            arcs.push_back({j + 1, j});
        else
            throw error(errc::parse_error, "bad pattern character '" + std::string(1, pattern[j]) +
                                               "' in \"" + pattern + "\"");
    }
    return Digraph(n, std::move(arcs));
}

struct AppendixRow {
    std::string arrow_pattern;  // over {'>', '<'}, length n-1
    VertexLabeling labels;
    LambdaTriple lambda;
};

/// Interleaved row text, e.g. "0>1<1>0>0".
inline std::string row_text(const AppendixRow& row) {
    std::string out;
    for (std::size_t i = 0; i < row.labels.size(); ++i) {
        out += static_cast<char>('0' + row.labels[i]);
        if (i < row.arrow_pattern.size()) out += row.arrow_pattern[i];
    }
    return out;
}

/// Splits an interleaved row like "0>1<1>0>0" into labels and arrow pattern.
inline std::pair<VertexLabeling, std::string> parse_appendix_row(const std::string& row) {
    if (row.size() % 2 == 0 || row.size() < 3)
        throw error(errc::fixture_mismatch, "malformed row \"" + row + "\"");
    VertexLabeling labels;
    std::string pattern;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const char c = row[i];
        if (i % 2 == 0) {
            if (c != '0' && c != '1')
                throw error(errc::fixture_mismatch, "malformed row \"" + row + "\"");
            labels.push_back(c - '0');
        } else {
            if (c != '>' && c != '<')
                throw error(errc::fixture_mismatch, "malformed row \"" + row + "\"");
            pattern += c;
        }
    }
    return {std::move(labels), std::move(pattern)};
}

// ---------------------------------------------------------------------------
// Campaigns.
// ---------------------------------------------------------------------------

/// Compares brute-forced existence of a cordial star orientation against the
/// closed form (n <= 11 and n != 10) for every n in 2..max_n, and checks that
/// the constructed witnesses verify.
inline CampaignReport verify_star_lemma(int max_n) {
    if (max_n < 2) throw std::invalid_argument("verify_star_lemma needs max_n >= 2");
    CampaignReport report;
    detail::CampaignTimer timer(report);
    report.campaign = "star_lemma";
    report.parameters = {{"max_n", std::to_string(max_n)}};

    struct Row {
        bool exists = false;
        std::string fail;
    };
    auto rows = detail::parallel_map<Row>(
        static_cast<std::size_t>(max_n - 1), worker_count(), [&](std::size_t idx) {
            const int n = static_cast<int>(idx) + 2;
            const StarReport closed = analyze_star(n);
            bool brute = false;
            for (int inward = 0; inward < n && !brute; ++inward)
                brute = is_23_cordial(detail::star_with_inward(n, inward));
            Row row{brute, ""};
            if (brute != closed.exists) {
                row.fail = "brute force says " + std::string(brute ? "cordial" : "not cordial") +
                           ", closed form says " + (closed.exists ? "cordial" : "not cordial");
            } else if (closed.exists && n >= 2) {
                if (!closed.orientation || !closed.labeling || !closed.lambda ||
                    !is_friendly(*closed.labeling) || !is_friendly(*closed.lambda) ||
                    lambda(*closed.orientation, *closed.labeling) != *closed.lambda)
                    row.fail = "constructed star witness failed verification";
            }
            return row;
        });

    std::vector<std::string> non_cordial;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int n = static_cast<int>(i) + 2;
        ++report.instances_checked;
        if (!rows[i].fail.empty())
            report.failures.push_back({"n=" + std::to_string(n), rows[i].fail});
        if (!rows[i].exists) non_cordial.push_back(std::to_string(n));
    }
    report.parameters.emplace_back("non_cordial_n", detail::join(non_cordial, ","));
    detail::finalize_failures(report);
    return report;
}

namespace detail {

inline std::vector<std::string> non_cordial_path_patterns(int n) {
    const auto ds = orientations(path_graph(n));
    auto flags = parallel_map<char>(ds.size(), worker_count(), [&](std::size_t i) {
        return static_cast<char>(is_23_cordial(ds[i]) ? 1 : 0);
    });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (!flags[i]) out.push_back(pattern_from_mask(n, i));
    return out;
}

inline const std::vector<std::string>& expected_non_cordial_4path() {
    static const std::vector<std::string> expected = {">><", "><<", "<<>", "<>>"};
    return expected;
}

}  // namespace detail

/// Checks all 2^(n-1) orientations per n: every orientation is cordial except
/// exactly the four known 4-path patterns.
inline CampaignReport verify_path_lemma(int min_n, int max_n) {
    if (min_n < 1 || max_n < min_n)
        throw std::invalid_argument("verify_path_lemma needs 1 <= min_n <= max_n");
    CampaignReport report;
    detail::CampaignTimer timer(report);
    report.campaign = "path_lemma";
    report.parameters = {{"min_n", std::to_string(min_n)}, {"max_n", std::to_string(max_n)}};

    for (int n = min_n; n <= max_n; ++n) {
        report.instances_checked += std::int64_t{1} << (n - 1);
        auto non_cordial = detail::non_cordial_path_patterns(n);
        if (n == 4) {
            auto expected = detail::expected_non_cordial_4path();
            std::sort(expected.begin(), expected.end());
            std::vector<std::string> found = non_cordial;
            std::sort(found.begin(), found.end());
            for (const std::string& p : found)
                if (!std::binary_search(expected.begin(), expected.end(), p))
                    report.failures.push_back(
                        {"n=4 pattern " + p, "unexpectedly not (2,3)-cordial"});
            for (const std::string& p : expected)
                if (!std::binary_search(found.begin(), found.end(), p))
                    report.failures.push_back(
                        {"n=4 pattern " + p, "expected non-cordial but a labeling was found"});
        } else {
            for (const std::string& p : non_cordial)
                report.failures.push_back({"n=" + std::to_string(n) + " pattern " + p,
                                           "orientation is not (2,3)-cordial"});
        }
    }
    detail::finalize_failures(report);
    return report;
}

/// Extends the path sweep to n = 10..max_n (desk cap 16); any non-cordial
/// orientation is reported with its arrow pattern verbatim.
inline CampaignReport verify_path_conjecture(int max_n) {
    if (max_n > 16)
        throw error(errc::size_cap, "verify_path_conjecture caps at max_n = 16");
    CampaignReport report;
    detail::CampaignTimer timer(report);
    report.campaign = "path_conjecture";
    report.parameters = {{"max_n", std::to_string(max_n)}};
    for (int n = 10; n <= max_n; ++n) {
        report.instances_checked += std::int64_t{1} << (n - 1);
        for (const std::string& p : detail::non_cordial_path_patterns(n))
            report.failures.push_back(
                {"n=" + std::to_string(n) + " pattern " + p, "counterexample: " + p});
    }
    detail::finalize_failures(report);
    return report;
}

/// For every free tree with max degree <= max_deg and n <= max_n, searches
/// the 2^(n-1) orientations for one that is (2,3)-cordial. Trees above the
/// degree cap that lack a cordial orientation are reported for contrast in
/// the parameters, not as failures.
inline CampaignReport verify_tree_conjecture(int max_n, int max_deg = 3) {
    if (max_n < 1) throw std::invalid_argument("verify_tree_conjecture needs max_n >= 1");
    if (max_n > 12) throw error(errc::size_cap, "verify_tree_conjecture caps at max_n = 12");
    CampaignReport report;
    detail::CampaignTimer timer(report);
    report.campaign = "tree_conjecture";
    report.parameters = {{"max_n", std::to_string(max_n)},
                         {"max_degree", std::to_string(max_deg)}};

    std::vector<std::string> counts;
    std::vector<std::string> high_degree_non_cordial;
    for (int n = 1; n <= max_n; ++n) {
        const auto trees = free_trees(n);
        counts.push_back(std::to_string(trees.size()));
        struct Row {
            int degree = 0;
            bool orientable = false;
            std::string edges;
        };
        auto rows = detail::parallel_map<Row>(trees.size(), worker_count(), [&](std::size_t i) {
            const UndirectedGraph& t = trees[i];
            Row row;
            row.degree = max_degree(t);
            for_each_orientation(t, [&](const Digraph& d) {
                if (is_23_cordial(d)) {
                    row.orientable = true;
                    return false;
                }
                return true;
            });
            std::string e;
            for (const Edge& edge : t.edges()) {
                if (!e.empty()) e += ",";
                e += std::to_string(edge.u) + "-" + std::to_string(edge.v);
            }
            row.edges = "{" + e + "}";
            return row;
        });
        report.instances_checked += static_cast<long long>(trees.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string id =
                "n=" + std::to_string(n) + " tree #" + std::to_string(i) + " " + rows[i].edges;
            if (rows[i].orientable) continue;
            if (rows[i].degree <= max_deg)
                report.failures.push_back({id, "no orientation is (2,3)-cordial"});
            else
                high_degree_non_cordial.push_back(id + " (max degree " +
                                                  std::to_string(rows[i].degree) + ")");
        }
    }
    report.parameters.emplace_back("tree_counts", detail::join(counts, ","));
    report.parameters.emplace_back("non_cordial_above_degree_cap",
                                   detail::join(high_degree_non_cordial, "; "));
    detail::finalize_failures(report);
    return report;
}

/// Checks the tournament classes on 3 and 4 vertices: both 3-classes are
/// cordial, exactly three of the four 4-classes are, and the failing class
/// has score vector (1,1,1,3).
inline CampaignReport verify_tournaments() {
    CampaignReport report;
    detail::CampaignTimer timer(report);
    report.campaign = "tournaments";
    report.parameters = {{"orders", "3,4"}};

    const auto t3 = tournaments(3);
    const auto t4 = tournaments(4);
    if (t3.size() != 2)
        report.failures.push_back(
            {"n=3", "expected 2 isomorphism classes, got " + std::to_string(t3.size())});
    if (t4.size() != 4)
        report.failures.push_back(
            {"n=4", "expected 4 isomorphism classes, got " + std::to_string(t4.size())});

    auto describe_scores = [](const Digraph& d) {
        std::string s = "(";
        const auto scores = score_vector(d);
        for (std::size_t i = 0; i < scores.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(scores[i]);
        }
        return s + ")";
    };

    for (std::size_t i = 0; i < t3.size(); ++i) {
        ++report.instances_checked;
        if (!is_23_cordial(t3[i]))
            report.failures.push_back({"n=3 class #" + std::to_string(i),
                                       "tournament with score vector " + describe_scores(t3[i]) +
                                           " is not (2,3)-cordial"});
    }
    std::vector<std::string> non_cordial_scores;
    for (std::size_t i = 0; i < t4.size(); ++i) {
        ++report.instances_checked;
        if (!is_23_cordial(t4[i])) non_cordial_scores.push_back(describe_scores(t4[i]));
    }
    if (non_cordial_scores.size() != 1 ||
        (non_cordial_scores.size() == 1 && non_cordial_scores[0] != "(1,1,1,3)")) {
        report.failures.push_back(
            {"n=4", "expected exactly one non-cordial class with score vector (1,1,1,3), got {" +
                        detail::join(non_cordial_scores, ", ") + "}"});
    }
    report.parameters.emplace_back("n4_noncordial_score_vector",
                                   detail::join(non_cordial_scores, ";"));
    detail::finalize_failures(report);
    return report;
}

/// Emits one row per orientation of the n-path (n in {5,6,7}) with the
/// canonical cordial labeling found by search.
inline std::vector<AppendixRow> reproduce_appendix(int n) {
    if (n < 5 || n > 7) throw std::invalid_argument("reproduce_appendix needs n in {5,6,7}");
    std::vector<AppendixRow> rows;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const std::string pattern = pattern_from_mask(n, mask);
        const Digraph d = pattern_digraph(pattern);
        const CordialityResult r = find_cordial_labeling(d);
        if (!r.cordial)
            throw std::logic_error("orientation " + pattern + " has no cordial labeling");
        rows.push_back({pattern, *r.witness, *r.lambda});
    }
    return rows;
}

/// Validates the bundled table for n in {5,6,7}: every row must carry
/// friendly labels and a friendly recomputed triple, and the rows must list
/// each orientation exactly once. Offending rows are itemized, never fixed.
inline CampaignReport validate_appendix(int n) {
    if (n < 5 || n > 7) throw std::invalid_argument("validate_appendix needs n in {5,6,7}");
    CampaignReport report;
    detail::CampaignTimer timer(report);
    report.campaign = "appendix_validation";
    const auto rows = appendix_tables::rows_for(n);
    report.parameters = {{"n", std::to_string(n)}, {"rows", std::to_string(rows.size())}};

    std::map<std::string, std::vector<int>> by_pattern;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ++report.instances_checked;
        const std::string row(rows[i]);
        const std::string instance = "row " + std::to_string(i) + " (" + row + ")";
        try {
            auto [labels, pattern] = parse_appendix_row(row);
            if (static_cast<int>(labels.size()) != n) {
                report.failures.push_back({instance, "wrong length"});
                continue;
            }
            by_pattern[pattern].push_back(static_cast<int>(i));
            if (!is_friendly(labels)) {
                long long ones = 0;
                for (int x : labels) ones += (x != 0);
                report.failures.push_back(
                    {instance, "vertex labels not friendly (" +
                                   std::to_string(labels.size() - ones) + " zeros, " +
                                   std::to_string(ones) + " ones)"});
                continue;
            }
            const LambdaTriple t = lambda(pattern_digraph(pattern), labels);
            if (!is_friendly(t))
                report.failures.push_back(
                    {instance, "induced triple not friendly (" + std::to_string(t.alpha) + "," +
                                   std::to_string(t.beta) + "," + std::to_string(t.gamma) + ")"});
        } catch (const error& e) {
            report.failures.push_back({instance, e.what()});
        }
    }

    for (const auto& [pattern, indices] : by_pattern)
        if (indices.size() > 1) {
            std::vector<std::string> ix;
            for (int i : indices) ix.push_back(std::to_string(i));
            report.failures.push_back({"pattern " + pattern,
                                       "listed " + std::to_string(indices.size()) +
                                           " times (rows " + detail::join(ix, ",") + ")"});
        }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        const std::string pattern = pattern_from_mask(n, mask);
        if (!by_pattern.count(pattern))
            report.failures.push_back({"pattern " + pattern, "missing from the table"});
    }
    detail::finalize_failures(report);
    return report;
}

// ---------------------------------------------------------------------------
// Report rendering.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json report_json(const CampaignReport& report) {
    nlohmann::ordered_json j;
    j["campaign"] = report.campaign;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.parameters) params[key] = value;
    j["parameters"] = params;
    j["instances_checked"] = report.instances_checked;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const CampaignFailure& f : report.failures)
        failures.push_back({{"instance", f.instance}, {"detail", f.detail}});
    j["failures"] = failures;
    j["pass"] = report.pass();
    return j;
}

inline std::string report_text(const CampaignReport& report) {
    std::string out = (report.pass() ? "[PASS] " : "[FAIL] ") + report.campaign;
    for (const auto& [key, value] : report.parameters)
        if (!value.empty()) out += "  " + key + "=" + value;
    out += "  instances=" + std::to_string(report.instances_checked);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3fs", report.elapsed_seconds);
    out += "  elapsed=" + std::string(buf) + "\n";
    for (const CampaignFailure& f : report.failures)
        out += "  FAIL " + f.instance + ": " + f.detail + "\n";
    return out;
}

}  // namespace cordial
