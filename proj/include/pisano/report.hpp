#pragma once

// Report assembly, printed-table reproduction, the one-weight search, and
// exact JSON round-tripping. Everything numeric stays an integer.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "pisano/code.hpp"
#include "pisano/coset_graph.hpp"
#include "pisano/fib.hpp"
#include "pisano/parallel.hpp"
#include "pisano/schmidt_white.hpp"
#include "pisano/tables.hpp"

namespace pisano {

using nlohmann::json;

inline std::string case_label(FieldCase c) {
    return c == FieldCase::Split ? "split" : "irreducible";
}

inline FieldCase case_from_label(const std::string& s) {
    if (s == "split") return FieldCase::Split;
    if (s == "irreducible") return FieldCase::Irreducible;
    throw std::invalid_argument("unknown case label: " + s);
}

inline std::vector<std::string> hypothesis_tags_for(uint64_t p) {
    std::vector<std::string> tags;
    if (p == 3) tags.push_back("outside stated hypothesis p > 5");
    return tags;
}

struct AnalysisReport {
    PisanoProfile profile;
    CodeAnalysis code;
    std::optional<CounterexampleVerdict> verdict;  // irreducible case only
    std::optional<SrgCertificate> srg;             // on request, projective case only
    std::vector<std::string> hypothesis_tags;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

inline AnalysisReport analyze_prime(uint64_t p, bool with_srg = false) {
    PisanoProfile prof = pisano_profile(p);
    AnalysisReport rep;
    rep.profile = prof;
    rep.code = analyze_code(prof);
    if (prof.kind == FieldCase::Irreducible) rep.verdict = counterexample_verdict(prof);
    if (with_srg) {
        SrgCertificate cert = verify_srg(build_syndrome_graph(prof));
        auto [pos, neg] = eigenvalues_from_weights(prof);
        if (pos != cert.eigen_pos || neg != cert.eigen_neg)
            throw invariant_violation("weight-derived spectrum disagrees with the counted one");
        rep.srg = cert;
    }
    rep.hypothesis_tags = hypothesis_tags_for(p);
    return rep;
}

struct TableRowComparison {
    uint64_t p = 0;
    uint64_t printed_N = 0;
    uint64_t printed_e = 0;
    std::optional<uint64_t> printed_dual;
    uint64_t N = 0;
    uint64_t e = 0;
    uint64_t K = 0;
    FieldCase kind = FieldCase::Split;
    uint64_t dual = 0;
    bool match = false;

    friend bool operator==(const TableRowComparison&, const TableRowComparison&) = default;
};

struct TableComparison {
    int which = 0;
    std::vector<TableRowComparison> rows;
    bool all_match = false;
    bool acceptable = false;  // mismatches are exactly the known discrepancies

    friend bool operator==(const TableComparison&, const TableComparison&) = default;
};

// Recomputes every cell of one printed table. Nothing is taken on faith:
// N, e, K come from the profile and the dual distance from the generator
// matrix, whether or not the table prints that column.
inline TableComparison compare_table(int which) {
    if (which < 1 || which > 4) throw std::invalid_argument("table number must be 1, 2, 3 or 4");
    struct Printed {
        uint64_t p, N, e;
        std::optional<uint64_t> dual;
    };
    std::vector<Printed> printed;
    if (which == 1)
        for (auto r : printed_table_1) printed.push_back({r.p, r.N, r.e, std::nullopt});
    else if (which == 2)
        for (auto r : printed_table_2) printed.push_back({r.p, r.N, r.e, std::nullopt});
    else if (which == 3)
        for (auto r : printed_table_3) printed.push_back({r.p, r.N, r.e, r.dual});
    else
        for (auto r : printed_table_4) printed.push_back({r.p, r.N, r.e, r.dual});

    TableComparison cmp;
    cmp.which = which;
    cmp.rows.resize(printed.size());
    parallel_stripes(printed.size(), [&](unsigned, uint64_t lo, uint64_t hi) {
        for (uint64_t i = lo; i < hi; ++i) {
            const Printed& pr = printed[i];
            PisanoProfile prof = pisano_profile(pr.p);
            TableRowComparison row;
            row.p = pr.p;
            row.printed_N = pr.N;
            row.printed_e = pr.e;
            row.printed_dual = pr.dual;
            row.N = prof.N;
            row.e = prof.e;
            row.K = prof.K;
            row.kind = prof.kind;
            row.dual = dual_distance(build_generator_matrix(prof));
            row.match =
                row.N == pr.N && row.e == pr.e && (!pr.dual || row.dual == *pr.dual);
            cmp.rows[i] = row;
        }
    });
    std::vector<uint64_t> mismatched;
    for (const auto& row : cmp.rows)
        if (!row.match) mismatched.push_back(row.p);
    cmp.all_match = mismatched.empty();
    std::vector<uint64_t> expected;
    if (which == 3)
        expected.assign(known_discrepancies_table_3.begin(), known_discrepancies_table_3.end());
    cmp.acceptable = mismatched == expected;
    return cmp;
}

struct SearchHit {
    uint64_t p = 0;
    uint64_t N = 0;
    uint64_t e = 0;
    uint64_t K = 0;
    std::vector<std::string> hypothesis_tags;

    friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

struct SearchResult {
    uint64_t max_p = 0;
    std::vector<SearchHit> hits;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// Primes p = +-3 (mod 10) up to max_p whose rank of apparition is p + 1,
// equivalently N = 2(p + 1) with K = 2: the one-weight pattern. Ranks are
// checked before profiles so non-hits cost one divisor sweep each.
inline SearchResult search_one_weight(uint64_t max_p) {
    SearchResult res;
    res.max_p = max_p;
    if (max_p < 3) return res;
    if (max_p > max_modulus)
        throw std::invalid_argument("search bound exceeds the supported modulus range");
    std::vector<std::vector<SearchHit>> partial(stripe_count(max_p + 1));
    parallel_stripes(max_p + 1, [&](unsigned s, uint64_t lo, uint64_t hi) {
        for (uint64_t p = lo; p < hi; ++p) {
            if (p < 3 || (p % 10 != 3 && p % 10 != 7)) continue;
            if (!is_prime(p)) continue;
            if (fib_rank(p) != p + 1) continue;
            PisanoProfile prof = pisano_profile(p);
            if (prof.e != p + 1 || prof.K != 2 || prof.N != 2 * (p + 1))
                throw invariant_violation("rank p + 1 without the expected decomposition");
            if (!is_one_weight(closed_form_weights(prof)))
                throw invariant_violation("rank p + 1 without a one-weight distribution");
            partial[s].push_back({p, prof.N, prof.e, prof.K, hypothesis_tags_for(p)});
        }
    });
    for (const auto& part : partial) res.hits.insert(res.hits.end(), part.begin(), part.end());
    return res;
}

// -- JSON ------------------------------------------------------------------

namespace detail {

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

template <class T>
void get_opt(const json& j, const char* key, std::optional<T>& v) {
    const json& f = j.at(key);
    if (f.is_null())
        v.reset();
    else
        v = f.get<T>();
}

}  // namespace detail

inline void to_json(json& j, const PisanoProfile& p) {
    j = json{{"p", p.p}, {"N", p.N}, {"e", p.e}, {"K", p.K}, {"case", case_label(p.kind)}};
}

inline void from_json(const json& j, PisanoProfile& p) {
    j.at("p").get_to(p.p);
    j.at("N").get_to(p.N);
    j.at("e").get_to(p.e);
    j.at("K").get_to(p.K);
    p.kind = case_from_label(j.at("case").get<std::string>());
}

inline void to_json(json& j, const CyclicCheck& c) {
    j = json{{"division_exact", c.division_exact},
             {"shift_closure", c.shift_closure},
             {"annihilator", c.annihilator},
             {"samples", c.samples}};
}

inline void from_json(const json& j, CyclicCheck& c) {
    j.at("division_exact").get_to(c.division_exact);
    j.at("shift_closure").get_to(c.shift_closure);
    j.at("annihilator").get_to(c.annihilator);
    j.at("samples").get_to(c.samples);
}

inline void to_json(json& j, const CodeAnalysis& c) {
    j = json::object();
    j["closed_form"] = c.closed_form;
    j["one_weight"] = c.one_weight;
    detail::put_opt(j, "enumerated", c.enumerated);
    detail::put_opt(j, "dual_distance", c.dual_dist);
    detail::put_opt(j, "mds", c.mds);
    detail::put_opt(j, "cyclic", c.cyclic);
}

// The profile member is not repeated inside the code object; the caller
// that owns both (AnalysisReport) restores it.
inline void from_json(const json& j, CodeAnalysis& c) {
    c.closed_form = j.at("closed_form").get<WeightDistribution>();
    j.at("one_weight").get_to(c.one_weight);
    detail::get_opt(j, "enumerated", c.enumerated);
    detail::get_opt(j, "dual_distance", c.dual_dist);
    detail::get_opt(j, "mds", c.mds);
    detail::get_opt(j, "cyclic", c.cyclic);
}

inline void to_json(json& j, const CounterexampleVerdict& v) {
    j = json{{"p", v.p},
             {"N", v.N},
             {"u", v.u},
             {"semiprimitive", v.semiprimitive},
             {"subfield", v.subfield},
             {"exceptional_excluded", v.exceptional_excluded},
             {"n_equals_2p_plus_2", v.n_equals_2p_plus_2},
             {"is_counterexample", v.is_counterexample}};
}

inline void from_json(const json& j, CounterexampleVerdict& v) {
    j.at("p").get_to(v.p);
    j.at("N").get_to(v.N);
    j.at("u").get_to(v.u);
    j.at("semiprimitive").get_to(v.semiprimitive);
    j.at("subfield").get_to(v.subfield);
    j.at("exceptional_excluded").get_to(v.exceptional_excluded);
    j.at("n_equals_2p_plus_2").get_to(v.n_equals_2p_plus_2);
    j.at("is_counterexample").get_to(v.is_counterexample);
}

inline void to_json(json& j, const SrgCertificate& c) {
    j = json{{"v", c.v},
             {"k", c.k},
             {"lambda", c.lambda},
             {"mu", c.mu},
             {"eigenvalues", json::array({c.eigen_pos, c.eigen_neg})},
             {"verified", c.verified}};
}

inline void from_json(const json& j, SrgCertificate& c) {
    j.at("v").get_to(c.v);
    j.at("k").get_to(c.k);
    j.at("lambda").get_to(c.lambda);
    j.at("mu").get_to(c.mu);
    c.eigen_pos = j.at("eigenvalues").at(0).get<int64_t>();
    c.eigen_neg = j.at("eigenvalues").at(1).get<int64_t>();
    j.at("verified").get_to(c.verified);
}

inline void to_json(json& j, const AnalysisReport& r) {
    j = json::object();
    j["profile"] = r.profile;
    j["code"] = r.code;
    detail::put_opt(j, "verdict", r.verdict);
    detail::put_opt(j, "srg", r.srg);
    j["hypothesis_tags"] = r.hypothesis_tags;
}

inline void from_json(const json& j, AnalysisReport& r) {
    r.profile = j.at("profile").get<PisanoProfile>();
    r.code = j.at("code").get<CodeAnalysis>();
    r.code.profile = r.profile;
    detail::get_opt(j, "verdict", r.verdict);
    detail::get_opt(j, "srg", r.srg);
    r.hypothesis_tags = j.at("hypothesis_tags").get<std::vector<std::string>>();
}

inline void to_json(json& j, const TableRowComparison& r) {
    j = json::object();
    j["p"] = r.p;
    j["printed_N"] = r.printed_N;
    j["printed_e"] = r.printed_e;
    detail::put_opt(j, "printed_dual", r.printed_dual);
    j["N"] = r.N;
    j["e"] = r.e;
    j["K"] = r.K;
    j["case"] = case_label(r.kind);
    j["dual_distance"] = r.dual;
    j["match"] = r.match;
}

inline void from_json(const json& j, TableRowComparison& r) {
    j.at("p").get_to(r.p);
    j.at("printed_N").get_to(r.printed_N);
    j.at("printed_e").get_to(r.printed_e);
    detail::get_opt(j, "printed_dual", r.printed_dual);
    j.at("N").get_to(r.N);
    j.at("e").get_to(r.e);
    j.at("K").get_to(r.K);
    r.kind = case_from_label(j.at("case").get<std::string>());
    j.at("dual_distance").get_to(r.dual);
    j.at("match").get_to(r.match);
}

inline void to_json(json& j, const TableComparison& t) {
    j = json{{"table", t.which},
             {"rows", t.rows},
             {"all_match", t.all_match},
             {"acceptable", t.acceptable}};
}

inline void from_json(const json& j, TableComparison& t) {
    j.at("table").get_to(t.which);
    t.rows = j.at("rows").get<std::vector<TableRowComparison>>();
    j.at("all_match").get_to(t.all_match);
    j.at("acceptable").get_to(t.acceptable);
}

inline void to_json(json& j, const SearchHit& h) {
    j = json{{"p", h.p},
             {"N", h.N},
             {"e", h.e},
             {"K", h.K},
             {"hypothesis_tags", h.hypothesis_tags}};
}

inline void from_json(const json& j, SearchHit& h) {
    j.at("p").get_to(h.p);
    j.at("N").get_to(h.N);
    j.at("e").get_to(h.e);
    j.at("K").get_to(h.K);
    h.hypothesis_tags = j.at("hypothesis_tags").get<std::vector<std::string>>();
}

inline void to_json(json& j, const SearchResult& r) {
    j = json{{"max_p", r.max_p}, {"hits", r.hits}};
}

inline void from_json(const json& j, SearchResult& r) {
    j.at("max_p").get_to(r.max_p);
    r.hits = j.at("hits").get<std::vector<SearchHit>>();
}

// -- Text rendering ---------------------------------------------------------

inline void render_weights(const WeightDistribution& w, std::ostream& out) {
    bool first = true;
    for (auto [wt, c] : w) {
        out << (first ? "" : "  ") << wt << ":" << c;
        first = false;
    }
}

inline void render_text(const AnalysisReport& r, std::ostream& out) {
    const PisanoProfile& p = r.profile;
    out << "prime " << p.p << " (" << case_label(p.kind) << " case)\n";
    out << "  period N = " << p.N << ", rank e = " << p.e << ", order K = " << p.K << "\n";
    out << "  weights (closed form): ";
    render_weights(r.code.closed_form, out);
    out << "\n  one-weight: " << (r.code.one_weight ? "yes" : "no") << "\n";
    if (r.code.enumerated)
        out << "  enumeration over all p^2 words: agrees with the closed form\n";
    if (r.code.dual_dist)
        out << "  dual distance = " << *r.code.dual_dist << ", MDS: "
            << (r.code.mds && *r.code.mds ? "yes" : "no") << "\n";
    if (r.code.cyclic)
        out << "  cyclic structure: division exact, shifts closed, annihilator holds ("
            << r.code.cyclic->samples << " samples)\n";
    if (r.verdict) {
        const CounterexampleVerdict& v = *r.verdict;
        out << "  u = " << v.u << ", semiprimitive: " << (v.semiprimitive ? "yes" : "no")
            << ", subfield: " << (v.subfield ? "yes" : "no")
            << ", exceptional excluded: " << (v.exceptional_excluded ? "yes" : "no") << "\n";
        out << "  counterexample: " << (v.is_counterexample ? "yes" : "no")
            << ", N = 2(p+1): " << (v.n_equals_2p_plus_2 ? "yes" : "no") << "\n";
    }
    if (r.srg) {
        const SrgCertificate& c = *r.srg;
        out << "  srg: v=" << c.v << " k=" << c.k << " lambda=" << c.lambda << " mu=" << c.mu
            << " eigenvalues {" << c.eigen_pos << ", " << c.eigen_neg << "} "
            << (c.verified ? "verified" : "NOT VERIFIED") << "\n";
    }
    for (const auto& tag : r.hypothesis_tags) out << "  note: " << tag << "\n";
}

inline void render_text(const TableComparison& t, std::ostream& out) {
    out << "table " << t.which << " (printed vs recomputed)\n";
    uint64_t matching = 0;
    for (const auto& row : t.rows) {
        out << "  p=" << row.p << ": printed N=" << row.printed_N << " e=" << row.printed_e;
        if (row.printed_dual) out << " d=" << *row.printed_dual;
        out << " | computed N=" << row.N << " e=" << row.e << " d=" << row.dual << " [K="
            << row.K << " " << case_label(row.kind) << "] | "
            << (row.match ? "match" : "MISMATCH");
        out << "\n";
        if (row.match) ++matching;
    }
    out << "rows matching: " << matching << "/" << t.rows.size() << "\n";
    if (t.all_match)
        out << "all printed values reproduced\n";
    else if (t.acceptable)
        out << "mismatches limited to the known printed-value discrepancies\n";
    else
        out << "UNEXPECTED MISMATCH against printed values\n";
}

inline void render_text(const SearchResult& r, std::ostream& out) {
    out << "search: primes p = +-3 (mod 10) up to " << r.max_p
        << " with rank e = p + 1 (one-weight, N = 2(p+1))\n";
    for (const auto& h : r.hits) {
        out << "  p=" << h.p << " N=" << h.N << " e=" << h.e << " K=" << h.K;
        for (const auto& tag : h.hypothesis_tags) out << "  [" << tag << "]";
        out << "\n";
    }
    out << "hits: " << r.hits.size() << "\n";
}

inline void render_text(const SrgCertificate& c, uint64_t p, std::ostream& out) {
    out << "srg for p=" << p << ": v=" << c.v << " k=" << c.k << " lambda=" << c.lambda
        << " mu=" << c.mu << " eigenvalues {" << c.eigen_pos << ", " << c.eigen_neg << "} "
        << (c.verified ? "verified" : "NOT VERIFIED") << "\n";
}

inline void write_table_csv(const TableComparison& t, std::ostream& out) {
    out << "p,N,e,K,case,verdict,dual_distance\n";
    for (const auto& row : t.rows)
        out << row.p << ',' << row.N << ',' << row.e << ',' << row.K << ','
            << case_label(row.kind) << ',' << (row.match ? "match" : "mismatch") << ','
            << row.dual << '\n';
}

}  // namespace pisano
