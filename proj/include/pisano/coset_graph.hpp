#pragma once

// Coset graph of the dual code for projective (K = 1) primes, realized as
// a Cayley graph on the syndrome space F_p x F_p. Strong regularity is
// certified entrywise in integer arithmetic: every vertex pair is checked
// against the A^2 = lambda A + mu (J - I - A) + k I identity by exhaustive
// common-neighbor counting.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pisano/arith.hpp"
#include "pisano/code.hpp"
#include "pisano/fib.hpp"
#include "pisano/parallel.hpp"

namespace pisano {

// Vertex count is p^2 and the pair scan touches p^4 pairs; beyond this the
// adjacency bitset stops being comfortable.
inline constexpr uint64_t srg_prime_guard = 61;

struct SyndromeGraph {
    uint64_t p = 0;
    uint64_t N = 0;
    uint64_t v = 0;       // p^2 vertices, encoded a + p*b
    uint64_t degree = 0;  // N(p - 1)
    std::vector<uint32_t> connection;  // sorted nonzero encodings, negation-closed
    uint64_t words_per_row = 0;
    std::vector<uint64_t> adjacency;  // v rows of words_per_row bitset words

    bool adjacent(uint64_t x, uint64_t y) const {
        return (adjacency[x * words_per_row + y / 64] >> (y % 64)) & 1;
    }
};

struct SrgCertificate {
    uint64_t v = 0;
    uint64_t k = 0;
    uint64_t lambda = 0;
    uint64_t mu = 0;
    int64_t eigen_pos = 0;  // p - N
    int64_t eigen_neg = 0;  // -N
    bool verified = false;

    friend bool operator==(const SrgCertificate&, const SrgCertificate&) = default;
};

// Cayley graph on (F_p^2, +) whose connection set is every nonzero scalar
// multiple of the generator columns. Projectivity (d-perp = 3) makes those
// multiples pairwise distinct, which is re-checked by counting.
inline SyndromeGraph build_syndrome_graph(const PisanoProfile& prof,
                                          const GeneratorMatrix& m) {
    if (prof.K != 1)
        throw std::invalid_argument("coset graph needs a projective code (K = 1), p = " +
                                    std::to_string(prof.p) + " has K = " +
                                    std::to_string(prof.K));
    if (prof.p > srg_prime_guard)
        throw std::invalid_argument("p exceeds the adjacency-matrix guard " +
                                    std::to_string(srg_prime_guard));
    const uint64_t p = prof.p;
    const uint64_t N = prof.N;
    SyndromeGraph g;
    g.p = p;
    g.N = N;
    g.v = p * p;
    g.degree = N * (p - 1);

    g.connection.reserve(N * (p - 1));
    for (uint64_t i = 0; i < N; ++i) {
        uint64_t a = m.rows[0][i], b = m.rows[1][i];
        for (uint64_t c = 1; c < p; ++c)
            g.connection.push_back(
                static_cast<uint32_t>(mulmod(c, a, p) + p * mulmod(c, b, p)));
    }
    std::sort(g.connection.begin(), g.connection.end());
    if (std::adjacent_find(g.connection.begin(), g.connection.end()) != g.connection.end())
        throw invariant_violation("connection set collides: two columns are proportional");
    if (!g.connection.empty() && g.connection.front() == 0)
        throw invariant_violation("connection set contains zero");
    for (uint32_t s : g.connection) {
        uint64_t a = s % p, b = s / p;
        uint32_t neg = static_cast<uint32_t>((p - a) % p + p * ((p - b) % p));
        if (!std::binary_search(g.connection.begin(), g.connection.end(), neg))
            throw invariant_violation("connection set is not closed under negation");
    }

    g.words_per_row = (g.v + 63) / 64;
    g.adjacency.assign(g.v * g.words_per_row, 0);
    for (uint64_t x = 0; x < g.v; ++x) {
        uint64_t a = x % p, b = x / p;
        uint64_t* row = g.adjacency.data() + x * g.words_per_row;
        for (uint32_t s : g.connection) {
            uint64_t y = (a + s % p) % p + p * ((b + s / p) % p);
            row[y / 64] |= uint64_t{1} << (y % 64);
        }
    }
    for (uint64_t x = 0; x < g.v; ++x) {
        uint64_t deg = 0;
        const uint64_t* row = g.adjacency.data() + x * g.words_per_row;
        for (uint64_t w = 0; w < g.words_per_row; ++w) deg += std::popcount(row[w]);
        if (deg != g.degree)
            throw invariant_violation("vertex degree differs from N(p - 1)");
        if (g.adjacent(x, x)) throw invariant_violation("graph has a loop");
    }
    return g;
}

inline SyndromeGraph build_syndrome_graph(const PisanoProfile& prof) {
    return build_syndrome_graph(prof, build_generator_matrix(prof));
}

// Exhaustive strong-regularity certificate. For every pair, the number of
// common neighbors is the (x, y) entry of A^2; constancy across the
// adjacent and non-adjacent classes is exactly the entrywise identity
// A^2 = lambda A + mu (J - I - A) + k I together with the degree check.
inline SrgCertificate verify_srg(const SyndromeGraph& g) {
    const uint64_t v = g.v;
    const uint64_t wpr = g.words_per_row;
    constexpr uint64_t unset = ~uint64_t{0};

    unsigned stripes = stripe_count(v);
    std::vector<uint64_t> lambda_seen(stripes, unset), mu_seen(stripes, unset);
    std::vector<uint8_t> consistent(stripes, 1);
    parallel_stripes(v, [&](unsigned s, uint64_t lo, uint64_t hi) {
        uint64_t lam = unset, mu = unset;
        bool ok = true;
        for (uint64_t x = lo; x < hi && ok; ++x) {
            const uint64_t* rx = g.adjacency.data() + x * wpr;
            for (uint64_t y = x + 1; y < v && ok; ++y) {
                const uint64_t* ry = g.adjacency.data() + y * wpr;
                uint64_t common = 0;
                for (uint64_t w = 0; w < wpr; ++w) common += std::popcount(rx[w] & ry[w]);
                uint64_t& slot = g.adjacent(x, y) ? lam : mu;
                if (slot == unset)
                    slot = common;
                else if (slot != common)
                    ok = false;
            }
        }
        lambda_seen[s] = lam;
        mu_seen[s] = mu;
        consistent[s] = ok ? 1 : 0;
    });

    uint64_t lambda = unset, mu = unset;
    bool ok = true;
    for (unsigned s = 0; s < stripes; ++s) {
        if (!consistent[s]) ok = false;
        for (auto [seen, mine] : {std::pair<uint64_t, uint64_t*>{lambda_seen[s], &lambda},
                                  std::pair<uint64_t, uint64_t*>{mu_seen[s], &mu}}) {
            if (seen == unset) continue;
            if (*mine == unset)
                *mine = seen;
            else if (*mine != seen)
                ok = false;
        }
    }
    if (!ok || lambda == unset || mu == unset)
        throw invariant_violation("common-neighbor counts are not constant: not strongly regular");

    SrgCertificate cert;
    cert.v = v;
    cert.k = g.degree;
    cert.lambda = lambda;
    cert.mu = mu;

    if ((v - cert.k - 1) * mu != cert.k * (cert.k - lambda - 1))
        throw invariant_violation("strongly regular feasibility identity failed");

    // Restricted eigenvalues solve x^2 - (lambda - mu) x - (k - mu) = 0.
    int64_t tr = static_cast<int64_t>(lambda) - static_cast<int64_t>(mu);
    int64_t det = static_cast<int64_t>(cert.k) - static_cast<int64_t>(mu);
    int64_t disc = tr * tr + 4 * det;
    if (disc < 0) throw invariant_violation("eigenvalue discriminant is negative");
    uint64_t root = isqrt(static_cast<uint64_t>(disc));
    if (static_cast<int64_t>(root * root) != disc)
        throw invariant_violation("restricted eigenvalues are not integers");
    int64_t r = static_cast<int64_t>(root);
    if ((tr + r) % 2 != 0)
        throw invariant_violation("restricted eigenvalues are not integers");
    cert.eigen_pos = (tr + r) / 2;
    cert.eigen_neg = (tr - r) / 2;

    int64_t N = static_cast<int64_t>(g.N), p = static_cast<int64_t>(g.p);
    if (cert.eigen_pos != p - N || cert.eigen_neg != -N)
        throw invariant_violation("spectrum differs from {p - N, -N}");
    cert.verified = true;
    return cert;
}

// Restricted eigenvalue attached to a codeword weight: w -> N(p-1) - p w.
// Weight 0 maps to the graph degree.
inline int64_t weight_to_eigenvalue(const PisanoProfile& prof, uint64_t w) {
    return static_cast<int64_t>(prof.N * (prof.p - 1)) -
           static_cast<int64_t>(prof.p * w);
}

// The two restricted eigenvalues read off the nonzero weights {N-K, N};
// for projective codes this is {p - N, -N}.
inline std::pair<int64_t, int64_t> eigenvalues_from_weights(const PisanoProfile& prof) {
    if (prof.K != 1)
        throw std::invalid_argument("weight-to-spectrum map needs a projective code (K = 1)");
    int64_t from_low = weight_to_eigenvalue(prof, prof.N - prof.K);
    int64_t from_high = weight_to_eigenvalue(prof, prof.N);
    return {from_low, from_high};
}

inline void write_edge_list(const SyndromeGraph& g, std::ostream& out) {
    for (uint64_t x = 0; x < g.v; ++x)
        for (uint64_t y = x + 1; y < g.v; ++y)
            if (g.adjacent(x, y)) out << x << ' ' << y << '\n';
}

}  // namespace pisano
