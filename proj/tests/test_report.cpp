#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pisano/cli.hpp"
#include "pisano/report.hpp"

using namespace pisano;

namespace {

int run(std::vector<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

}  // namespace

TEST_CASE("analysis reports round-trip through JSON", "[report]") {
    for (uint64_t p : {11ull, 13ull, 23ull}) {
        CAPTURE(p);
        AnalysisReport rep = analyze_prime(p, p == 11);
        json j = rep;
        REQUIRE(j.get<AnalysisReport>() == rep);
        REQUIRE(json::parse(j.dump(2)).get<AnalysisReport>() == rep);
    }
    AnalysisReport irr = analyze_prime(23);
    REQUIRE(irr.verdict.has_value());
    REQUIRE(!irr.srg.has_value());
    AnalysisReport split = analyze_prime(11);
    REQUIRE(!split.verdict.has_value());
}

TEST_CASE("table comparisons", "[report]") {
    for (int which : {1, 2, 4}) {
        CAPTURE(which);
        TableComparison cmp = compare_table(which);
        REQUIRE(cmp.rows.size() == 10);
        REQUIRE(cmp.all_match);
        REQUIRE(cmp.acceptable);
        json j = cmp;
        REQUIRE(j.get<TableComparison>() == cmp);
    }
    TableComparison t3 = compare_table(3);
    REQUIRE(!t3.all_match);
    REQUIRE(t3.acceptable);
    uint64_t mismatched = 0;
    for (const auto& row : t3.rows) {
        if (row.match) continue;
        ++mismatched;
        REQUIRE(row.p == 79);
        REQUIRE(row.printed_N == 70);
        REQUIRE(row.N == 78);
        REQUIRE(row.e == 78);
        REQUIRE(row.dual == 3);
    }
    REQUIRE(mismatched == 1);
    REQUIRE_THROWS_AS(compare_table(0), std::invalid_argument);
    REQUIRE_THROWS_AS(compare_table(5), std::invalid_argument);
}

TEST_CASE("one-weight search", "[report]") {
    SearchResult res = search_one_weight(167);
    std::vector<uint64_t> ps;
    for (const auto& h : res.hits) ps.push_back(h.p);
    REQUIRE(ps == std::vector<uint64_t>{3, 7, 23, 43, 67, 83, 103, 127, 163, 167});
    for (const auto& h : res.hits) {
        CAPTURE(h.p);
        REQUIRE(h.e == h.p + 1);
        REQUIRE(h.N == 2 * (h.p + 1));
        REQUIRE(h.K == 2);
    }
    REQUIRE(res.hits.front().hypothesis_tags.size() == 1);
    REQUIRE(res.hits[1].hypothesis_tags.empty());

    SearchResult res50 = search_one_weight(50);
    ps.clear();
    for (const auto& h : res50.hits) ps.push_back(h.p);
    REQUIRE(ps == std::vector<uint64_t>{3, 7, 23, 43});

    REQUIRE(search_one_weight(2).hits.empty());

    json j = res;
    REQUIRE(j.get<SearchResult>() == res);
}

TEST_CASE("weight distributions serialize losslessly", "[report]") {
    WeightDistribution w{{0, 1}, {46, 528}};
    json j = w;
    REQUIRE(j.get<WeightDistribution>() == w);
}

TEST_CASE("CSV export columns", "[report]") {
    std::ostringstream os;
    write_table_csv(compare_table(1), os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    REQUIRE(header == "p,N,e,K,case,verdict,dual_distance");
    std::string line;
    uint64_t rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        REQUIRE(std::count(line.begin(), line.end(), ',') == 6);
    }
    REQUIRE(rows == 10);
    REQUIRE(os.str().find("3,8,4,2,irreducible,match,2") != std::string::npos);
    REQUIRE(os.str().find("23,48,24,2,irreducible,match,2") != std::string::npos);
}

TEST_CASE("exit codes separate bad input from falsified identities", "[report]") {
    std::ostringstream err;
    REQUIRE(detail::run_mapped(err, [] { return 0; }) == 0);
    REQUIRE(detail::run_mapped(err, []() -> int { throw std::invalid_argument("bad"); }) == 1);
    REQUIRE(detail::run_mapped(err, []() -> int { throw invariant_violation("false"); }) == 2);
}

TEST_CASE("command line drives the full pipeline", "[report]") {
    std::string out, err;

    REQUIRE(run({"analyze", "23"}, &out) == 0);
    REQUIRE(out.find("one-weight: yes") != std::string::npos);
    REQUIRE(out.find("counterexample: yes") != std::string::npos);

    REQUIRE(run({"analyze", "10"}, &out, &err) == 1);
    REQUIRE(err.find("prime") != std::string::npos);

    REQUIRE(run({"analyze", "3"}, &out) == 0);
    REQUIRE(out.find("outside stated hypothesis") != std::string::npos);

    REQUIRE(run({"analyze", "11", "--srg", "--json"}, &out) == 0);
    {
        json j = json::parse(out);
        REQUIRE(j.at("profile").at("N").get<uint64_t>() == 10);
        REQUIRE(j.at("profile").at("case").get<std::string>() == "split");
        REQUIRE(j.at("srg").at("verified").get<bool>());
        REQUIRE(j.at("verdict").is_null());
    }

    REQUIRE(run({"table", "1"}, &out) == 0);
    REQUIRE(run({"table", "3"}, &out) == 0);  // known discrepancy must not fail the run
    REQUIRE(out.find("known printed-value discrepancies") != std::string::npos);
    REQUIRE(run({"table", "7"}, &out, &err) == 1);

    REQUIRE(run({"search", "--max", "50", "--json"}, &out) == 0);
    {
        json j = json::parse(out);
        REQUIRE(j.at("hits").size() == 4);
        REQUIRE(j.at("hits").at(0).at("p").get<uint64_t>() == 3);
    }

    REQUIRE(run({"srg", "11"}, &out) == 0);
    REQUIRE(out.find("verified") != std::string::npos);
    REQUIRE(run({"srg", "41"}, &out, &err) == 1);

    REQUIRE(run({"--help"}, &out) == 0);
    REQUIRE(out.find("analyze") != std::string::npos);
    REQUIRE(run({}, &out, &err) == 1);
    REQUIRE(run({"bogus"}, &out, &err) == 1);
}

TEST_CASE("edge list export through the command line", "[report]") {
    const std::string path = "srg11_edges.txt";
    REQUIRE(run({"srg", "11", "--export", path}) == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    uint64_t x = 0, y = 0, edges = 0, misordered = 0;
    while (f >> x >> y) {
        if (!(x < y && y < 121)) ++misordered;
        ++edges;
    }
    REQUIRE(misordered == 0);
    REQUIRE(edges == 121 * 100 / 2);
    std::remove(path.c_str());
}

TEST_CASE("table CSV export through the command line", "[report]") {
    const std::string path = "table1.csv";
    REQUIRE(run({"table", "1", "--csv", path}) == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    REQUIRE(header == "p,N,e,K,case,verdict,dual_distance");
    std::remove(path.c_str());
}
