// hicat: exact computation and cross-verification of higher Catalan numbers,
// their combinatorial models, and map counts by genus.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 guard
// exceeded.  All numeric output is exact (decimal integers or p/q rationals);
// nothing is ever rounded.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hicat/catalan.hpp"
#include "hicat/gluing.hpp"
#include "hicat/guard.hpp"
#include "hicat/lattice.hpp"
#include "hicat/map_counts.hpp"
#include "hicat/series.hpp"
#include "hicat/verify.hpp"

namespace {

using namespace hicat;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) out += sep;
        out += parts[k];
    }
    return out;
}

int cmd_catalan(int nu, int jmax, const std::string& method, int step_guard, int face_guard) {
    std::vector<std::string> values;
    values.reserve(static_cast<size_t>(jmax) + 1);
    if (method == "formula") {
        for (int j = 0; j <= jmax; ++j) values.push_back(to_decimal(higher_catalan(nu, j)));
    } else if (method == "recursion") {
        for (const Integer& v : catalan_by_recursion(nu, jmax)) values.push_back(to_decimal(v));
    } else if (method == "series") {
        Series z = solve_z(nu, jmax);
        for (int j = 0; j <= jmax; ++j) values.push_back(to_decimal(z[j]));
    } else if (method == "paths") {
        for (int j = 0; j <= jmax; ++j)
            values.push_back(to_decimal(Integer(enumerate_dyck_paths(nu, j, step_guard).size())));
    } else {  // dissections
        for (int j = 0; j <= jmax; ++j)
            values.push_back(j == 0 ? "1"  // the empty dissection of the 2-gon
                                    : to_decimal(Integer(
                                          enumerate_dissections(nu, j, face_guard).size())));
    }
    std::cout << join(values, " ") << "\n";
    return 0;
}

int cmd_maps(int nu, int j, const std::string& method, std::optional<int> genus_opt,
             int dart_guard, int threads) {
    bool want_formula = method == "formula" || method == "both";
    if (want_formula && genus_opt && *genus_opt >= 2) {
        std::cerr << "maps: no closed form in scope for genus " << *genus_opt
                  << " (use --method oracle)\n";
        return 2;
    }
    if (method == "formula") {
        if (!genus_opt) {
            std::cerr << "maps: --method formula needs --genus 0 or --genus 1\n";
            return 2;
        }
        std::cout << to_decimal(*genus_opt == 0 ? map_count_genus0(nu, j)
                                                : map_count_genus1(nu, j))
                  << "\n";
        return 0;
    }

    GenusCountTable table = count_maps_oracle(nu, j, dart_guard, threads);
    auto oracle_count = [&](int g) {
        auto it = table.counts.find(g);
        return it == table.counts.end() ? Integer(0) : it->second;
    };
    if (method == "oracle") {
        if (genus_opt)
            std::cout << to_decimal(oracle_count(*genus_opt)) << "\n";
        else
            std::cout << genus_table_json(table) << "\n";
        return 0;
    }

    // both: print each route and the verdict
    std::vector<int> genera = genus_opt ? std::vector<int>{*genus_opt} : std::vector<int>{0, 1};
    bool match = true;
    for (int g : genera) {
        Integer formula = g == 0 ? map_count_genus0(nu, j) : map_count_genus1(nu, j);
        Integer oracle = oracle_count(g);
        std::cout << "formula genus" << g << " = " << to_decimal(formula) << "\n";
        std::cout << "oracle  genus" << g << " = " << to_decimal(oracle) << "\n";
        match = match && formula == oracle;
    }
    std::cout << (match ? "match" : "MISMATCH") << "\n";
    return match ? 0 : 1;
}

int cmd_series(const std::string& what, int nu, int order, const std::string& alpha_text) {
    Series s(0);
    if (what == "z") {
        s = solve_z(nu, order);
    } else if (what == "e0") {
        s = e0_series(nu, order);
    } else if (what == "e1") {
        s = e1_series(nu, order);
    } else {  // zpow
        if (alpha_text.empty()) {
            std::cerr << "series: --what zpow needs --alpha\n";
            return 2;
        }
        Rational alpha;
        try {
            alpha = Rational(alpha_text);
        } catch (const std::exception&) {
            std::cerr << "series: cannot parse --alpha '" << alpha_text << "' as p or p/q\n";
            return 2;
        }
        s = series_pow(solve_z(nu, order), alpha);
    }
    std::vector<std::string> values;
    values.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) values.push_back(to_decimal(s[k]));
    std::cout << join(values, ", ") << "\n";
    return 0;
}

int cmd_paths(int nu, int j, bool count_only, int step_guard) {
    auto paths = enumerate_dyck_paths(nu, j, step_guard);
    if (count_only) {
        std::cout << paths.size() << "\n";
        return 0;
    }
    for (const LatticePath& p : paths) std::cout << path_str(p) << "\n";
    return 0;
}

int cmd_queues(int nu, int j, int lines, bool count_only, int step_guard) {
    auto arrangements = enumerate_queue_arrangements(nu, j, lines, step_guard);
    if (count_only) {
        std::cout << arrangements.size() << "\n";
        return 0;
    }
    for (const QueueArrangement& q : arrangements) std::cout << queue_str(q) << "\n";
    return 0;
}

int cmd_polygons(int nu, int j, bool count_only, int face_guard) {
    auto dissections = enumerate_dissections(nu, j, face_guard);
    if (count_only) {
        std::cout << dissections.size() << "\n";
        return 0;
    }
    for (const PolygonDissection& d : dissections) std::cout << dissection_str(d) << "\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, int mutate, int dart_guard, int threads,
               bool table) {
    VerifyOptions options;
    options.mutate_index = mutate;
    options.dart_guard = dart_guard;
    options.threads = threads;
    VerifyResult result = run_suites(suites, options);
    std::cout << report_json(result) << "\n";
    if (table) std::cerr << report_table(result);
    return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact higher Catalan numbers, combinatorial models, and map counts"};
    app.require_subcommand(1);
    const int max_nu = 1 << 16;

    int rc = 0;

    auto* cat = app.add_subcommand("catalan", "print zeta_0..zeta_jmax by the chosen method");
    int cat_nu = 2, cat_jmax = 10, cat_step_guard = kDefaultPathStepGuard,
        cat_face_guard = kDefaultDissectionFaceGuard;
    std::string cat_method = "formula";
    cat->add_option("--nu", cat_nu, "step parameter nu")->required()->check(CLI::Range(2, max_nu));
    cat->add_option("--jmax", cat_jmax, "largest index j")->required()->check(CLI::Range(0, max_nu));
    cat->add_option("--method", cat_method, "evaluation route")
        ->check(CLI::IsMember({"formula", "recursion", "series", "paths", "dissections"}));
    cat->add_option("--step-guard", cat_step_guard, "max steps for --method paths");
    cat->add_option("--face-guard", cat_face_guard, "max faces for --method dissections");
    cat->callback([&] { rc = cmd_catalan(cat_nu, cat_jmax, cat_method, cat_step_guard,
                                         cat_face_guard); });

    auto* maps = app.add_subcommand("maps", "count maps by genus (closed form and/or oracle)");
    int maps_nu = 2, maps_j = 1, maps_guard = kDefaultDartGuard, maps_threads = 1;
    std::string maps_method = "both";
    std::optional<int> maps_genus;
    maps->add_option("--nu", maps_nu, "half the vertex valence")
        ->required()
        ->check(CLI::Range(2, max_nu));
    maps->add_option("--j", maps_j, "number of vertices")->required()->check(CLI::Range(1, max_nu));
    maps->add_option("--method", maps_method, "formula, oracle, or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    maps->add_option("--genus", maps_genus, "restrict to one genus");
    maps->add_option("--guard", maps_guard, "dart budget for the oracle");
    maps->add_option("--threads", maps_threads, "oracle worker threads")
        ->check(CLI::Range(1, 256));
    maps->callback(
        [&] { rc = cmd_maps(maps_nu, maps_j, maps_method, maps_genus, maps_guard, maps_threads); });

    auto* ser = app.add_subcommand("series", "print coefficients 0..order of a series");
    int ser_nu = 2, ser_order = 10;
    std::string ser_what = "z", ser_alpha;
    ser->add_option("--what", ser_what, "which series")
        ->required()
        ->check(CLI::IsMember({"z", "e0", "e1", "zpow"}));
    ser->add_option("--nu", ser_nu, "step parameter nu")->required()->check(CLI::Range(2, max_nu));
    ser->add_option("--order", ser_order, "truncation order")->check(CLI::Range(0, max_nu));
    ser->add_option("--alpha", ser_alpha, "exponent p or p/q (zpow only)");
    ser->callback([&] { rc = cmd_series(ser_what, ser_nu, ser_order, ser_alpha); });

    auto* paths = app.add_subcommand("paths", "enumerate admissible lattice paths");
    int paths_nu = 2, paths_j = 1, paths_guard = kDefaultPathStepGuard;
    bool paths_count = false;
    paths->add_option("--nu", paths_nu, "step parameter nu")
        ->required()
        ->check(CLI::Range(2, max_nu));
    paths->add_option("--j", paths_j, "number of Down steps")
        ->required()
        ->check(CLI::Range(0, max_nu));
    paths->add_flag("--count", paths_count, "print only the count");
    paths->add_option("--guard", paths_guard, "max steps");
    paths->callback([&] { rc = cmd_paths(paths_nu, paths_j, paths_count, paths_guard); });

    auto* queues = app.add_subcommand("queues", "enumerate multi-line queue arrangements");
    int queues_nu = 2, queues_j = 1, queues_lines = 1, queues_guard = kDefaultPathStepGuard;
    bool queues_count = false;
    queues->add_option("--nu", queues_nu, "bill denomination nu")
        ->required()
        ->check(CLI::Range(2, max_nu));
    queues->add_option("--j", queues_j, "total Nu bills across lines")
        ->required()
        ->check(CLI::Range(0, max_nu));
    queues->add_option("--lines", queues_lines, "number of lines")->check(CLI::Range(1, max_nu));
    queues->add_flag("--count", queues_count, "print only the count");
    queues->add_option("--guard", queues_guard, "max customers");
    queues->callback(
        [&] { rc = cmd_queues(queues_nu, queues_j, queues_lines, queues_count, queues_guard); });

    auto* polys = app.add_subcommand("polygons", "enumerate marked polygon dissections");
    int polys_nu = 2, polys_j = 1, polys_guard = kDefaultDissectionFaceGuard;
    bool polys_count = false;
    polys->add_option("--nu", polys_nu, "faces have nu+1 sides")
        ->required()
        ->check(CLI::Range(2, max_nu));
    polys->add_option("--j", polys_j, "number of faces")->required()->check(CLI::Range(1, max_nu));
    polys->add_flag("--count", polys_count, "print only the count");
    polys->add_option("--guard", polys_guard, "max faces");
    polys->callback([&] { rc = cmd_polygons(polys_nu, polys_j, polys_count, polys_guard); });

    auto* verify = app.add_subcommand("verify", "run identity suites and emit a JSON report");
    std::vector<std::string> verify_suites{"all"};
    int verify_mutate = -1, verify_guard = kDefaultDartGuard, verify_threads = 1;
    bool verify_table = false;
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", verify_suites, "suite name(s), or all")
        ->check(CLI::IsMember(suite_choices));
    verify->add_option("--mutate", verify_mutate,
                       "perturb the case with this global index (self-test)");
    verify->add_option("--guard", verify_guard, "dart budget for the maps suite");
    verify->add_option("--threads", verify_threads, "oracle worker threads")
        ->check(CLI::Range(1, 256));
    verify->add_flag("--table", verify_table, "also print a per-suite table to stderr");
    verify->callback([&] {
        rc = cmd_verify(verify_suites, verify_mutate, verify_guard, verify_threads, verify_table);
    });

    try {
        app.parse(argc, argv);
    } catch (const GuardError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
