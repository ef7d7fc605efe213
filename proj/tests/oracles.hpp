#pragma once

// Slow reference implementations used only by the tests. Everything here
// is written directly from the defining recurrences and definitions, with
// no code shared with the library under test.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// (F_n mod m, F_{n+1} mod m) by plain iteration.
inline std::pair<uint64_t, uint64_t> fib_iter(uint64_t n, uint64_t m) {
    uint64_t a = 0 % m, b = 1 % m;
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t c = (a + b) % m;
        a = b;
        b = c;
    }
    return {a, b};
}

// Least n > 0 with (F_n, F_{n+1}) = (0, 1) mod m, by walking the sequence.
inline uint64_t pisano_iter(uint64_t m) {
    if (m == 1) return 1;
    uint64_t a = 0, b = 1;
    for (uint64_t n = 1;; ++n) {
        uint64_t c = (a + b) % m;
        a = b;
        b = c;
        if (a == 0 && b == 1) return n;
    }
}

// Least n > 0 with F_n = 0 mod m.
inline uint64_t rank_iter(uint64_t m) {
    uint64_t a = 0, b = 1;
    for (uint64_t n = 1;; ++n) {
        uint64_t c = (a + b) % m;
        a = b;
        b = c;
        if (a == 0) return n;
    }
}

// Period of x_{n+1} = x_n + x_{n-1} from seeds (s0, s1), by walking.
inline uint64_t sequence_period_iter(uint64_t s0, uint64_t s1, uint64_t m) {
    uint64_t a = s0 % m, b = s1 % m;
    uint64_t n = 0;
    do {
        uint64_t c = (a + b) % m;
        a = b;
        b = c;
        ++n;
    } while (!(a == s0 % m && b == s1 % m));
    return n;
}

// Least k > 0 with a^k = 1 mod m, by repeated multiplication. Assumes the
// order exists and that m is small enough for 64-bit products.
inline uint64_t order_iter(uint64_t a, uint64_t m) {
    uint64_t x = a % m;
    for (uint64_t k = 1;; ++k) {
        if (x == 1) return k;
        x = (x * (a % m)) % m;
    }
}

inline bool is_prime_iter(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline int legendre_iter(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    for (uint64_t x = 1; x < p; ++x)
        if ((x * x) % p == a) return 1;
    return -1;
}

// Exhaustive weight census of the span of two rows, one codeword at a time.
inline std::map<uint64_t, uint64_t> weight_census_iter(const std::vector<uint64_t>& row0,
                                                       const std::vector<uint64_t>& row1,
                                                       uint64_t p) {
    std::map<uint64_t, uint64_t> dist;
    const size_t n = row0.size();
    for (uint64_t l1 = 0; l1 < p; ++l1) {
        for (uint64_t l2 = 0; l2 < p; ++l2) {
            uint64_t w = 0;
            for (size_t i = 0; i < n; ++i)
                if ((l1 * row0[i] + l2 * row1[i]) % p != 0) ++w;
            ++dist[w];
        }
    }
    return dist;
}

// Dual distance of a two-row generator with no zero column: 2 when some
// pair of columns is linearly dependent (a 2x2 determinant vanishes),
// otherwise 3.
inline uint64_t dual_distance_iter(const std::vector<uint64_t>& row0,
                                   const std::vector<uint64_t>& row1, uint64_t p) {
    const size_t n = row0.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if ((row0[i] * row1[j]) % p == (row0[j] * row1[i]) % p) return 2;
    return 3;
}

}  // namespace oracle
