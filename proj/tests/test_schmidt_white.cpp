#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "pisano/schmidt_white.hpp"

using namespace pisano;

TEST_CASE("u is the cofactor of the length in p^2 - 1", "[sw]") {
    REQUIRE(compute_u(23, 48) == 11);
    REQUIRE(compute_u(43, 88) == 21);
    REQUIRE(compute_u(3, 8) == 1);
    REQUIRE_THROWS_AS(compute_u(23, 47), invariant_violation);
    REQUIRE_THROWS_AS(compute_u(23, 0), invariant_violation);
    REQUIRE_THROWS_AS(compute_u(10, 8), std::invalid_argument);
}

TEST_CASE("semiprimitivity detection", "[sw]") {
    REQUIRE(!is_semiprimitive(23, 11));
    REQUIRE(!is_semiprimitive(13, 6));
    REQUIRE(is_semiprimitive(7, 2));
    REQUIRE(is_semiprimitive(23, 2));
    REQUIRE(is_semiprimitive(3, 4));
    REQUIRE(!is_semiprimitive(3, 1));
    REQUIRE(!is_semiprimitive(23, 1));
    REQUIRE_THROWS_AS(is_semiprimitive(3, 0), std::invalid_argument);

    // exhaustive cross-check of the defining property for u >= 2:
    // some power of p must land on u - 1 mod u
    for (uint64_t p : {3ull, 7ull, 13ull, 23ull, 47ull}) {
        for (uint64_t u = 2; u <= 60; ++u) {
            bool expect = false;
            uint64_t x = 1 % u;
            for (uint64_t j = 0; j <= 2 * u && !expect; ++j) {
                if (x == u - 1) expect = true;
                x = (x * (p % u)) % u;
            }
            CAPTURE(p, u);
            REQUIRE(is_semiprimitive(p, u) == expect);
        }
    }
}

TEST_CASE("subfield test is a pure length comparison", "[sw]") {
    REQUIRE(!is_subfield_code(23, 48));
    REQUIRE(!is_subfield_code(13, 28));
    REQUIRE(is_subfield_code(23, 22));
    REQUIRE(is_subfield_code(13, 12));
    REQUIRE_THROWS_AS(is_subfield_code(11, 10), std::invalid_argument);
}

TEST_CASE("verdicts for single primes", "[sw]") {
    CounterexampleVerdict v23 = counterexample_verdict(uint64_t{23});
    REQUIRE(v23.p == 23);
    REQUIRE(v23.N == 48);
    REQUIRE(v23.u == 11);
    REQUIRE(!v23.semiprimitive);
    REQUIRE(!v23.subfield);
    REQUIRE(v23.exceptional_excluded);
    REQUIRE(v23.n_equals_2p_plus_2);
    REQUIRE(v23.is_counterexample);

    CounterexampleVerdict v47 = counterexample_verdict(uint64_t{47});
    REQUIRE(v47.N == 32);
    REQUIRE(v47.u == 69);
    REQUIRE(!v47.n_equals_2p_plus_2);
    REQUIRE(v47.is_counterexample);

    REQUIRE_THROWS_AS(counterexample_verdict(uint64_t{11}), std::invalid_argument);
}

TEST_CASE("all twenty tabled primes evade the classification", "[sw]") {
    const std::map<uint64_t, uint64_t> expected_u = {
        {3, 1},    {7, 3},    {23, 11},  {43, 21},  {67, 33},  {83, 41},  {103, 51},
        {127, 63}, {163, 81}, {167, 83}, {13, 6},   {17, 8},   {37, 18},  {47, 69},
        {53, 26},  {73, 36},  {97, 48},  {107, 159}, {113, 168}, {137, 68}};
    uint64_t with_full_length = 0;
    for (auto [p, u] : expected_u) {
        CAPTURE(p);
        CounterexampleVerdict v = counterexample_verdict(p);
        REQUIRE(v.u == u);
        REQUIRE(!v.semiprimitive);
        REQUIRE(!v.subfield);
        REQUIRE(v.exceptional_excluded);
        REQUIRE(v.is_counterexample);
        if (v.n_equals_2p_plus_2) {
            ++with_full_length;
            REQUIRE(v.u == (p - 1) / 2);
        } else {
            REQUIRE((p == 47 || p == 107 || p == 113));
        }
    }
    REQUIRE(with_full_length == 17);
}
