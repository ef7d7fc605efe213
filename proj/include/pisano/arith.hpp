#pragma once

// Exact unsigned integer arithmetic: modular primitives, deterministic
// primality, factorization. Everything here is overflow-safe for moduli
// up to 2^31 (the library-wide bound) and for group orders up to p^2 - 1.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pisano {

// Moduli above this bound are rejected at every API boundary so that all
// intermediate products fit in 64 bits without checked arithmetic.
inline constexpr uint64_t max_modulus = uint64_t{1} << 31;

// Thrown when a numerically checked identity fails. Every theorem the
// library relies on is re-verified at runtime; this exception firing means
// a claimed identity is false for the given input, not that the input was
// malformed (that is std::invalid_argument).
class invariant_violation : public std::runtime_error {
public:
    explicit invariant_violation(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

inline void require_modulus(uint64_t m, uint64_t least = 2) {
    if (m < least)
        throw std::invalid_argument("modulus must be at least " + std::to_string(least));
    if (m > max_modulus)
        throw std::invalid_argument("modulus exceeds the supported bound 2^31");
}

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    a %= m;
    b %= m;
    uint64_t s = a + b;  // both < 2^63 after reduction, no wrap
    return s >= m ? s - m : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
    a %= m;
    b %= m;
    return a >= b ? a - b : a + m - b;
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t acc = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) acc = mulmod(acc, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return acc;
}

inline uint64_t isqrt(uint64_t n) {
    auto sq = [](uint64_t x) { return static_cast<unsigned __int128>(x) * x; };
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && sq(r) > n) --r;
    while (sq(r + 1) <= n) ++r;
    return r;
}

// Deterministic Miller-Rabin; the base set below decides all n < 2^64.
inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

inline uint64_t pollard_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
    while (true) {
        uint64_t c = rng() % (n - 1) + 1;
        uint64_t x = rng() % n, y = x, d = 1;
        auto step = [&](uint64_t v) { return addmod(mulmod(v, v, n), c, n); };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

}  // namespace detail

// Prime factorization as (prime, exponent) pairs, primes ascending.
// Trial division up to 10^6 covers every modulus the library accepts;
// Pollard rho handles the leftover cofactors of p^2 - 1 group orders.
inline std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
    if (n == 0) throw std::invalid_argument("cannot factorize 0");
    std::vector<std::pair<uint64_t, unsigned>> out;
    auto push = [&](uint64_t q) {
        if (!out.empty() && out.back().first == q)
            ++out.back().second;
        else
            out.emplace_back(q, 1);
    };
    for (uint64_t d = 2; d <= 1000000 && d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) {
            push(d);
            n /= d;
        }
    }
    if (n == 1) return out;
    std::vector<uint64_t> stack{n};
    std::vector<uint64_t> primes;
    while (!stack.empty()) {
        uint64_t m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (is_prime(m)) {
            primes.push_back(m);
            continue;
        }
        uint64_t d = detail::pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(primes.begin(), primes.end());
    for (uint64_t q : primes) push(q);
    std::sort(out.begin(), out.end());
    return out;
}

inline uint64_t euler_phi(uint64_t n) {
    uint64_t phi = 1;
    for (auto [q, k] : factorize(n)) {
        phi *= q - 1;
        for (unsigned i = 1; i < k; ++i) phi *= q;
    }
    return phi;
}

inline std::vector<uint64_t> divisors_sorted(uint64_t n) {
    std::vector<uint64_t> divs{1};
    for (auto [q, k] : factorize(n)) {
        size_t len = divs.size();
        uint64_t pw = 1;
        for (unsigned i = 0; i < k; ++i) {
            pw *= q;
            for (size_t j = 0; j < len; ++j) divs.push_back(divs[j] * pw);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace pisano
