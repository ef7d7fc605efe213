#pragma once

// Fibonacci sequences mod m: fast evaluation, period lengths, and the
// rank/order decomposition of the period for prime moduli.

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "pisano/arith.hpp"
#include "pisano/field.hpp"

namespace pisano {

// (F_n mod m, F_{n+1} mod m) by doubling:
//   F_{2k}   = F_k (2 F_{k+1} - F_k)
//   F_{2k+1} = F_k^2 + F_{k+1}^2
inline std::pair<uint64_t, uint64_t> fib_pair_mod(uint64_t n, uint64_t m) {
    require_modulus(m, 1);
    uint64_t a = 0, b = 1 % m;
    if (n == 0) return {a, b};
    for (int i = std::bit_width(n) - 1; i >= 0; --i) {
        uint64_t c = mulmod(a, submod(mulmod(2, b, m), a, m), m);
        uint64_t d = addmod(mulmod(a, a, m), mulmod(b, b, m), m);
        if ((n >> i) & 1) {
            a = d;
            b = addmod(c, d, m);
        } else {
            a = c;
            b = d;
        }
    }
    return {a, b};
}

inline uint64_t fib_mod(uint64_t n, uint64_t m) { return fib_pair_mod(n, m).first; }

namespace detail {

inline bool is_period_point(uint64_t n, uint64_t m) {
    return fib_pair_mod(n, m) == std::pair<uint64_t, uint64_t>{0, 1 % m};
}

// Period mod a prime q. The indices where the state returns to (0, 1)
// are exactly the multiples of the period, so it is the least divisor
// of any verified period multiple that is itself a period point.
inline uint64_t period_mod_prime(uint64_t q) {
    uint64_t multiple;
    if (q == 2)
        multiple = 3;
    else if (q == 5)
        multiple = 20;
    else
        multiple = legendre(5, q) == 1 ? q - 1 : 2 * (q + 1);
    if (!is_period_point(multiple, q))
        throw invariant_violation("Fibonacci period mod " + std::to_string(q) +
                                  " does not divide its classified bound");
    for (uint64_t d : divisors_sorted(multiple))
        if (is_period_point(d, q)) return d;
    return multiple;
}

inline uint64_t period_mod_prime_power(uint64_t q, unsigned k) {
    uint64_t qk = q;
    uint64_t multiple = period_mod_prime(q);
    for (unsigned i = 1; i < k; ++i) {
        qk *= q;
        multiple *= q;
    }
    if (!is_period_point(multiple, qk))
        throw invariant_violation("Fibonacci period mod " + std::to_string(qk) +
                                  " does not divide its lifted bound");
    for (uint64_t d : divisors_sorted(multiple))
        if (is_period_point(d, qk)) return d;
    return multiple;
}

}  // namespace detail

// Period of the Fibonacci sequence mod m, assembled over the prime power
// factors of m.
inline uint64_t pisano_period(uint64_t m) {
    require_modulus(m, 1);
    if (m == 1) return 1;
    uint64_t period = 1;
    for (auto [q, k] : factorize(m))
        period = std::lcm(period, detail::period_mod_prime_power(q, k));
    if (!detail::is_period_point(period, m))
        throw invariant_violation("assembled Fibonacci period failed verification");
    return period;
}

// Rank of apparition: least r > 0 with p | F_r. The zero indices form
// exactly the multiples of the rank, and the rank divides p - (5|p).
inline uint64_t fib_rank(uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("rank of apparition needs a prime modulus");
    require_modulus(p);
    if (p == 2) return 3;
    if (p == 5) return 5;
    uint64_t bound = legendre(5, p) == 1 ? p - 1 : p + 1;
    for (uint64_t d : divisors_sorted(bound))
        if (fib_mod(d, p) == 0) return d;
    throw invariant_violation("rank of apparition exceeds p - (5|p)");
}

// Multiplicative order of F_{e+1} mod p where e is the rank; always 1, 2
// or 4, and the period is e times this value.
inline uint64_t fib_order(uint64_t p) {
    uint64_t e = fib_rank(p);
    uint64_t x = fib_pair_mod(e, p).second;
    if (x == 1 % p) return 1;
    if (x == p - 1) return 2;
    if (mulmod(x, x, p) == p - 1) return 4;
    throw invariant_violation("order of F_{e+1} mod " + std::to_string(p) +
                              " is outside {1, 2, 4}");
}

// N = period, e = rank of apparition, K = N / e.
struct PisanoProfile {
    uint64_t p = 0;
    uint64_t N = 0;
    uint64_t e = 0;
    uint64_t K = 0;
    FieldCase kind = FieldCase::Split;

    friend bool operator==(const PisanoProfile&, const PisanoProfile&) = default;
};

inline PisanoProfile pisano_profile(uint64_t p) {
    FieldCase kind = field_case(p);  // rejects 2, 5 and composites
    PisanoProfile out;
    out.p = p;
    out.e = fib_rank(p);
    out.K = fib_order(p);
    out.N = out.e * out.K;
    out.kind = kind;
    if (out.N != pisano_period(p))
        throw invariant_violation("rank times order does not equal the period");
    if (kind == FieldCase::Split) {
        if ((p - 1) % out.N != 0)
            throw invariant_violation("split-case period does not divide p - 1");
    } else {
        if (out.K == 1)
            throw invariant_violation("irreducible-case order cannot be 1");
        if ((2 * (p + 1)) % out.N != 0)
            throw invariant_violation("irreducible-case period does not divide 2(p + 1)");
        if (out.N % 4 != 0)
            throw invariant_violation("irreducible-case period is not divisible by 4");
    }
    return out;
}

// Period of x_{n+1} = x_n + x_{n-1} mod m from seeds (a, b). The state map
// is invertible, so the orbit length divides the Fibonacci period, and
// x_n = a F_{n-1} + b F_n closes the check at each candidate divisor.
inline uint64_t generalized_period(uint64_t a, uint64_t b, uint64_t m) {
    require_modulus(m, 1);
    a %= m;
    b %= m;
    uint64_t period = pisano_period(m);
    for (uint64_t d : divisors_sorted(period)) {
        auto [fd_prev, fd] = fib_pair_mod(d - 1, m);
        uint64_t xd = addmod(mulmod(a, fd_prev, m), mulmod(b, fd, m), m);
        uint64_t fd_next = addmod(fd_prev, fd, m);
        uint64_t xd1 = addmod(mulmod(a, fd, m), mulmod(b, fd_next, m), m);
        if (xd == a && xd1 == b) return d;
    }
    return period;
}

}  // namespace pisano
