#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pisano/coset_graph.hpp"

using namespace pisano;

TEST_CASE("syndrome graph construction", "[graph]") {
    PisanoProfile prof = pisano_profile(11);
    SyndromeGraph g = build_syndrome_graph(prof);
    REQUIRE(g.v == 121);
    REQUIRE(g.degree == 100);
    REQUIRE(g.connection.size() == 100);
    uint64_t asymmetric = 0;
    for (uint64_t x = 0; x < g.v; ++x)
        for (uint64_t y = 0; y < g.v; ++y)
            if (g.adjacent(x, y) != g.adjacent(y, x)) ++asymmetric;
    REQUIRE(asymmetric == 0);
    REQUIRE(!g.adjacent(0, 0));

    REQUIRE_THROWS_AS(build_syndrome_graph(pisano_profile(41)), std::invalid_argument);
    REQUIRE_THROWS_AS(build_syndrome_graph(pisano_profile(71)), std::invalid_argument);
}

TEST_CASE("strong regularity certificates", "[graph]") {
    struct Row {
        uint64_t p, v, k, lam, mu;
        int64_t pos, neg;
    };
    const Row rows[] = {
        {11, 121, 100, 81, 90, 1, -10},
        {19, 361, 324, 289, 306, 1, -18},
        {29, 841, 392, 183, 182, 15, -14},
        {31, 961, 900, 841, 870, 1, -30},
    };
    for (const Row& r : rows) {
        CAPTURE(r.p);
        PisanoProfile prof = pisano_profile(r.p);
        SyndromeGraph g = build_syndrome_graph(prof);
        SrgCertificate c = verify_srg(g);
        REQUIRE(c.v == r.v);
        REQUIRE(c.k == r.k);
        REQUIRE(c.lambda == r.lam);
        REQUIRE(c.mu == r.mu);
        REQUIRE(c.eigen_pos == r.pos);
        REQUIRE(c.eigen_neg == r.neg);
        REQUIRE(c.verified);
        REQUIRE((c.v - c.k - 1) * c.mu == c.k * (c.k - c.lambda - 1));
        auto [pos, neg] = eigenvalues_from_weights(prof);
        REQUIRE(pos == c.eigen_pos);
        REQUIRE(neg == c.eigen_neg);
    }
}

TEST_CASE("the quadratic adjacency identity holds entrywise", "[graph]") {
    PisanoProfile prof = pisano_profile(11);
    SyndromeGraph g = build_syndrome_graph(prof);
    SrgCertificate c = verify_srg(g);
    uint64_t wrong = 0;
    for (uint64_t x = 0; x < g.v; ++x) {
        for (uint64_t y = 0; y < g.v; ++y) {
            uint64_t common = 0;
            for (uint64_t z = 0; z < g.v; ++z)
                if (g.adjacent(x, z) && g.adjacent(z, y)) ++common;
            uint64_t expect = x == y ? c.k : (g.adjacent(x, y) ? c.lambda : c.mu);
            if (common != expect) ++wrong;
        }
    }
    REQUIRE(wrong == 0);  // A^2 = k I + lambda A + mu (J - I - A), entry by entry
}

TEST_CASE("weights map to restricted eigenvalues", "[graph]") {
    PisanoProfile prof = pisano_profile(11);
    REQUIRE(weight_to_eigenvalue(prof, 10) == -10);
    REQUIRE(weight_to_eigenvalue(prof, 9) == 1);
    REQUIRE(weight_to_eigenvalue(prof, 0) == 100);
    auto [pos, neg] = eigenvalues_from_weights(prof);
    REQUIRE(pos == 1);
    REQUIRE(neg == -10);
    REQUIRE_THROWS_AS(eigenvalues_from_weights(pisano_profile(41)), std::invalid_argument);
}

TEST_CASE("edge list export", "[graph]") {
    PisanoProfile prof = pisano_profile(11);
    SyndromeGraph g = build_syndrome_graph(prof);
    std::ostringstream os;
    write_edge_list(g, os);
    std::istringstream is(os.str());
    uint64_t x = 0, y = 0, edges = 0, malformed = 0;
    while (is >> x >> y) {
        if (!(x < y) || !g.adjacent(x, y)) ++malformed;
        ++edges;
    }
    REQUIRE(malformed == 0);
    REQUIRE(edges == g.v * g.degree / 2);
}
