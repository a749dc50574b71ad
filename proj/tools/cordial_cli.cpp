// Command-line front end: cordiality checks, verification campaigns, table
// reproduction and graph export.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cordial/cordial.hpp"

namespace {

cordial::Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw cordial::error(cordial::errc::parse_error, "cannot open '" + path + "'");
    return cordial::parse_digraph_text(in);
}

nlohmann::ordered_json check_json(const cordial::CordialityResult& result,
                                  const cordial::Digraph& d, bool with_count) {
    nlohmann::ordered_json j;
    j["cordial"] = result.cordial;
    if (result.cordial) {
        j["witness"] = *result.witness;
        j["lambda"] = {result.lambda->alpha, result.lambda->beta, result.lambda->gamma};
    }
    if (with_count) j["count"] = cordial::count_cordial_labelings(d);
    return j;
}

std::string labeling_text(const cordial::VertexLabeling& f) {
    std::string out = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(f[i]);
    }
    return out + ")";
}

std::string triple_text(const cordial::LambdaTriple& t) {
    return "(" + std::to_string(t.alpha) + "," + std::to_string(t.beta) + "," +
           std::to_string(t.gamma) + ")";
}

int emit_report(const cordial::CampaignReport& report, bool as_json) {
    if (as_json)
        std::cout << cordial::report_json(report).dump() << "\n";
    else
        std::cout << cordial::report_text(report);
    return report.pass() ? 0 : 1;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out)
        throw cordial::error(cordial::errc::parse_error, "cannot write '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(2,3)-cordiality toolkit for digon-free digraphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    // check
    auto* check = app.add_subcommand("check", "decide (2,3)-cordiality of a digraph file");
    std::string check_file;
    bool check_count = false, check_json_out = false;
    check->add_option("file", check_file, "digraph in text format")->required();
    check->add_flag("--count", check_count, "also count cordial labelings over the full space");
    check->add_flag("--json", check_json_out, "emit JSON");
    check->callback([&] {
        const cordial::Digraph d = load_digraph(check_file);
        const cordial::CordialityResult result = cordial::find_cordial_labeling(d);
        if (check_json_out) {
            std::cout << check_json(result, d, check_count).dump() << "\n";
        } else if (result.cordial) {
            std::cout << "(2,3)-cordial  witness=" << labeling_text(*result.witness)
                      << "  lambda=" << triple_text(*result.lambda) << "\n";
            if (check_count)
                std::cout << "cordial labelings: " << cordial::count_cordial_labelings(d)
                          << "\n";
        } else {
            std::cout << "not (2,3)-cordial\n";
            if (check_count) std::cout << "cordial labelings: 0\n";
        }
        exit_code = result.cordial ? 0 : 1;
    });

    // paths
    auto* paths = app.add_subcommand("paths", "path orientation sweeps");
    int paths_n = 0;
    bool paths_all = false, paths_lemma = false, paths_conjecture = false, paths_json = false;
    paths->add_option("--n", paths_n, "path order")->required();
    auto* flag_all = paths->add_flag("--all", paths_all, "list every orientation with a witness");
    auto* flag_lemma =
        paths->add_flag("--lemma", paths_lemma, "verify the path lemma for 1..n (default)");
    auto* flag_conj =
        paths->add_flag("--conjecture", paths_conjecture, "verify the conjecture range 10..n");
    flag_all->excludes(flag_lemma)->excludes(flag_conj);
    flag_lemma->excludes(flag_conj);
    paths->add_flag("--json", paths_json, "emit JSON");
    paths->callback([&] {
        if (paths_all) {
            bool all_cordial = true;
            cordial::for_each_orientation(cordial::path_graph(paths_n),
                                          [&, mask = std::uint64_t{0}](
                                              const cordial::Digraph& d) mutable {
                                              const std::string pattern =
                                                  cordial::pattern_from_mask(paths_n, mask++);
                                              const auto r = cordial::find_cordial_labeling(d);
                                              std::cout << pattern << "  ";
                                              if (r.cordial)
                                                  std::cout
                                                      << "witness=" << labeling_text(*r.witness)
                                                      << "  lambda=" << triple_text(*r.lambda);
                                              else {
                                                  std::cout << "not (2,3)-cordial";
                                                  all_cordial = false;
                                              }
                                              std::cout << "\n";
                                              return true;
                                          });
            exit_code = all_cordial ? 0 : 1;
        } else if (paths_conjecture) {
            exit_code = emit_report(cordial::verify_path_conjecture(paths_n), paths_json);
        } else {
            exit_code = emit_report(cordial::verify_path_lemma(1, paths_n), paths_json);
        }
    });

    // stars
    auto* stars = app.add_subcommand("stars", "verify the star existence lemma");
    int stars_max_n = 13;
    bool stars_json = false;
    stars->add_option("--max-n", stars_max_n, "largest star order")->required();
    stars->add_flag("--json", stars_json, "emit JSON");
    stars->callback(
        [&] { exit_code = emit_report(cordial::verify_star_lemma(stars_max_n), stars_json); });

    // cycles
    auto* cycles = app.add_subcommand("cycles", "construct a cordial cycle labeling");
    int cycles_n = 0;
    cycles->add_option("--n", cycles_n, "cycle length")->required();
    cycles->callback([&] {
        const auto [cycle, labeling] = cordial::construct_directed_cycle_labeling(cycles_n);
        std::cout << "labels=" << labeling_text(labeling)
                  << "  lambda=" << triple_text(cordial::lambda(cycle, labeling)) << "\n";
        exit_code = 0;
    });

    // trees
    auto* trees = app.add_subcommand("trees", "verify the tree conjecture at desk scale");
    int trees_max_n = 10, trees_max_degree = 3;
    bool trees_json = false;
    trees->add_option("--max-n", trees_max_n, "largest tree order")->required();
    trees->add_option("--max-degree", trees_max_degree, "degree cap (default 3)");
    trees->add_flag("--json", trees_json, "emit JSON");
    trees->callback([&] {
        exit_code =
            emit_report(cordial::verify_tree_conjecture(trees_max_n, trees_max_degree),
                        trees_json);
    });

    // tournaments
    auto* tours = app.add_subcommand("tournaments", "verify small tournament cordiality");
    bool tours_json = false;
    tours->add_flag("--json", tours_json, "emit JSON");
    tours->callback(
        [&] { exit_code = emit_report(cordial::verify_tournaments(), tours_json); });

    // appendix
    auto* appendix = app.add_subcommand("appendix", "reproduce or validate the bundled tables");
    int appendix_n = 5;
    bool appendix_validate = false, appendix_json = false;
    appendix->add_option("--n", appendix_n, "path order (5, 6 or 7)")
        ->required()
        ->check(CLI::IsMember({5, 6, 7}));
    appendix->add_flag("--validate", appendix_validate,
                       "check the bundled table instead of regenerating");
    appendix->add_flag("--json", appendix_json, "emit JSON (validation mode)");
    appendix->callback([&] {
        if (appendix_validate) {
            exit_code = emit_report(cordial::validate_appendix(appendix_n), appendix_json);
        } else {
            for (const cordial::AppendixRow& row : cordial::reproduce_appendix(appendix_n))
                std::cout << cordial::row_text(row) << "  lambda=" << triple_text(row.lambda)
                          << "\n";
            exit_code = 0;
        }
    });

    // export
    auto* export_cmd = app.add_subcommand("export", "convert a digraph file to DOT");
    std::string export_file, export_dot, export_text;
    bool export_witness = false;
    export_cmd->add_option("file", export_file, "digraph in text format")->required();
    export_cmd->add_option("--dot", export_dot, "DOT output path")->required();
    export_cmd->add_option("--text", export_text, "also rewrite in the text format");
    export_cmd->add_flag("--witness", export_witness,
                         "attach the canonical witness labeling when cordial");
    export_cmd->callback([&] {
        const cordial::Digraph d = load_digraph(export_file);
        const cordial::VertexLabeling* labels = nullptr;
        cordial::VertexLabeling witness;
        if (export_witness) {
            const auto r = cordial::find_cordial_labeling(d);
            if (r.cordial) {
                witness = *r.witness;
                labels = &witness;
            }
        }
        write_file(export_dot, cordial::to_dot(d, labels));
        if (!export_text.empty()) write_file(export_text, cordial::to_text(d));
        exit_code = 0;
    });

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "export the bundled small-tree fixtures");
    std::string fixtures_dir;
    fixtures->add_option("--out", fixtures_dir, "output directory")->required();
    fixtures->callback([&] {
        std::filesystem::create_directories(fixtures_dir);
        for (const cordial::TreeFixture& fx : cordial::small_tree_fixtures()) {
            const std::string base = fixtures_dir + "/" + fx.name;
            write_file(base + ".dg", cordial::to_text(fx.digraph));
            write_file(base + ".dot",
                       cordial::to_dot(fx.digraph, fx.labeling ? &*fx.labeling : nullptr));
        }
        exit_code = 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_name() == "CallForHelp" ? code : 2;
    } catch (const cordial::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
