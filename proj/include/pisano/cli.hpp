#pragma once

// Command-line surface. run_cli is the whole program minus the process
// boundary, so tests can drive it with captured streams.

#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pisano/report.hpp"

namespace pisano {

namespace detail {

// Exit-code contract: 0 success, 1 invalid input, 2 a numerically
// falsified identity.
inline int run_mapped(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const invariant_violation& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "Fibonacci-period cyclic codes over prime fields: period profiles, weight "
        "structure, classification tests, and strongly-regular-graph certificates"};
    app.require_subcommand(1);

    uint64_t analyze_p = 0;
    bool analyze_srg = false;
    bool analyze_json = false;
    CLI::App* analyze = app.add_subcommand("analyze", "full report for one prime");
    analyze->add_option("p", analyze_p, "odd prime other than 5")->required();
    analyze->add_flag("--srg", analyze_srg,
                      "include the coset-graph certificate (split case, K = 1, p <= 61)");
    analyze->add_flag("--json", analyze_json, "emit JSON");

    int table_which = 0;
    bool table_json = false;
    std::string table_csv;
    CLI::App* table = app.add_subcommand("table", "recompute a printed reference table");
    table->add_option("which", table_which, "table number, 1 to 4")->required();
    table->add_flag("--json", table_json, "emit JSON");
    table->add_option("--csv", table_csv, "also write the rows as CSV to this path");

    uint64_t search_max = 0;
    bool search_json = false;
    CLI::App* search =
        app.add_subcommand("search", "find one-weight primes (rank e = p + 1)");
    search->add_option("--max", search_max, "upper bound for p")->required();
    search->add_flag("--json", search_json, "emit JSON");

    uint64_t srg_p = 0;
    std::string srg_export;
    CLI::App* srg = app.add_subcommand("srg", "certify the coset graph as strongly regular");
    srg->add_option("p", srg_p, "split-case prime with K = 1, p <= 61")->required();
    srg->add_option("--export", srg_export, "write the edge list to this path");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    return detail::run_mapped(err, [&]() -> int {
        if (*analyze) {
            AnalysisReport rep = analyze_prime(analyze_p, analyze_srg);
            if (analyze_json)
                out << json(rep).dump(2) << "\n";
            else
                render_text(rep, out);
            return 0;
        }
        if (*table) {
            TableComparison cmp = compare_table(table_which);
            if (table_json)
                out << json(cmp).dump(2) << "\n";
            else
                render_text(cmp, out);
            if (!table_csv.empty()) {
                std::ofstream f(table_csv);
                if (!f) throw std::invalid_argument("cannot open " + table_csv + " for writing");
                write_table_csv(cmp, f);
            }
            return cmp.acceptable ? 0 : 2;
        }
        if (*search) {
            SearchResult res = search_one_weight(search_max);
            if (search_json)
                out << json(res).dump(2) << "\n";
            else
                render_text(res, out);
            return 0;
        }
        if (*srg) {
            PisanoProfile prof = pisano_profile(srg_p);
            SyndromeGraph graph = build_syndrome_graph(prof);
            SrgCertificate cert = verify_srg(graph);
            auto [pos, neg] = eigenvalues_from_weights(prof);
            if (pos != cert.eigen_pos || neg != cert.eigen_neg)
                throw invariant_violation("weight-derived spectrum disagrees with the counted one");
            render_text(cert, srg_p, out);
            if (!srg_export.empty()) {
                std::ofstream f(srg_export);
                if (!f)
                    throw std::invalid_argument("cannot open " + srg_export + " for writing");
                write_edge_list(graph, f);
                out << "edge list written to " << srg_export << "\n";
            }
            return 0;
        }
        return 1;
    });
}

}  // namespace pisano
