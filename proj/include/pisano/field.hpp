#pragma once

// F_p and the quadratic extension F_p[w]/(w^2 - w - 1), together with the
// roots of x^2 - x - 1 that drive the closed-form Fibonacci expressions.
// When 5 is a quadratic residue mod p the polynomial splits and both roots
// live in F_p; otherwise the quotient ring is the field F_{p^2}.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pisano/arith.hpp"

namespace pisano {

enum class FieldCase { Split, Irreducible };

inline void require_odd_prime(uint64_t p) {
    require_modulus(p, 3);
    if (p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

inline int legendre(uint64_t a, uint64_t p) {
    require_odd_prime(p);
    a %= p;
    if (a == 0) return 0;
    uint64_t e = powmod(a, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// Canonical square root of a mod p: the smaller of the two roots.
// Throws std::invalid_argument when a is not a quadratic residue.
inline uint64_t sqrt_mod(uint64_t a, uint64_t p) {
    require_odd_prime(p);
    a %= p;
    if (a == 0) return 0;
    if (legendre(a, p) != 1)
        throw std::invalid_argument(std::to_string(a) + " is not a quadratic residue mod " +
                                    std::to_string(p));
    uint64_t r;
    if (p % 4 == 3) {
        r = powmod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks on p - 1 = q * 2^s with q odd.
        uint64_t q = p - 1;
        unsigned s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        uint64_t z = 2;
        while (legendre(z, p) != -1) ++z;
        uint64_t m = s;
        uint64_t c = powmod(z, q, p);
        uint64_t t = powmod(a, q, p);
        r = powmod(a, (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0, t2 = t;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            uint64_t b = powmod(c, uint64_t{1} << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    return std::min(r, p - r);
}

inline FieldCase field_case(uint64_t p) {
    require_odd_prime(p);
    int chi = legendre(5, p);
    if (chi == 0)
        throw std::invalid_argument("x^2 - x - 1 is degenerate mod " + std::to_string(p));
    return chi == 1 ? FieldCase::Split : FieldCase::Irreducible;
}

// Element a + b*w of F_p[w]/(w^2 - w - 1). Base-field values have b = 0.
struct Fp2 {
    uint64_t a = 0;
    uint64_t b = 0;

    friend bool operator==(const Fp2&, const Fp2&) = default;
};

inline Fp2 fp2_add(Fp2 x, Fp2 y, uint64_t p) {
    return {addmod(x.a, y.a, p), addmod(x.b, y.b, p)};
}

inline Fp2 fp2_sub(Fp2 x, Fp2 y, uint64_t p) {
    return {submod(x.a, y.a, p), submod(x.b, y.b, p)};
}

inline Fp2 fp2_mul(Fp2 x, Fp2 y, uint64_t p) {
    // (a + bw)(c + dw) = ac + bd + (ad + bc + bd) w   since w^2 = w + 1
    uint64_t ac = mulmod(x.a, y.a, p);
    uint64_t bd = mulmod(x.b, y.b, p);
    uint64_t ad = mulmod(x.a, y.b, p);
    uint64_t bc = mulmod(x.b, y.a, p);
    return {addmod(ac, bd, p), addmod(addmod(ad, bc, p), bd, p)};
}

// Frobenius x -> x^p, which swaps the two roots of x^2 - x - 1:
// a + bw  ->  (a + b) - bw.
inline Fp2 fp2_frobenius(Fp2 x, uint64_t p) {
    return {addmod(x.a, x.b, p), submod(0, x.b, p)};
}

inline uint64_t fp2_norm(Fp2 x, uint64_t p) {
    // N(a + bw) = a^2 + ab - b^2
    uint64_t t = addmod(mulmod(x.a, x.a, p), mulmod(x.a, x.b, p), p);
    return submod(t, mulmod(x.b, x.b, p), p);
}

inline Fp2 fp2_pow(Fp2 x, uint64_t e, uint64_t p) {
    Fp2 acc{1 % p, 0};
    while (e != 0) {
        if (e & 1) acc = fp2_mul(acc, x, p);
        x = fp2_mul(x, x, p);
        e >>= 1;
    }
    return acc;
}

inline Fp2 fp2_inv(Fp2 x, uint64_t p) {
    uint64_t n = fp2_norm(x, p);
    if (n == 0)
        throw std::invalid_argument("element is not invertible");
    uint64_t ninv = powmod(n, p - 2, p);
    Fp2 c = fp2_frobenius(x, p);
    return {mulmod(c.a, ninv, p), mulmod(c.b, ninv, p)};
}

inline uint64_t inv_mod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw std::invalid_argument("0 has no inverse");
    return powmod(a, p - 2, p);
}

// The two roots of x^2 - x - 1 mod p, tagged by where they live.
// Split: both in F_p (b components zero), r the smaller residue.
// Irreducible: r = w and s = 1 - w in F_{p^2}.
struct RootPair {
    FieldCase kind = FieldCase::Split;
    Fp2 r;
    Fp2 s;
};

inline RootPair golden_roots(uint64_t p) {
    FieldCase kind = field_case(p);
    RootPair out;
    out.kind = kind;
    if (kind == FieldCase::Split) {
        uint64_t d = sqrt_mod(5, p);
        uint64_t half = (p + 1) / 2;  // inverse of 2
        uint64_t r1 = mulmod(addmod(1, d, p), half, p);
        uint64_t r2 = mulmod(submod(1, d, p), half, p);
        out.r = {std::min(r1, r2), 0};
        out.s = {std::max(r1, r2), 0};
    } else {
        out.r = {0, 1};
        out.s = {1, p - 1};
    }
    // Vieta: the roots sum to 1 and multiply to -1.
    if (fp2_add(out.r, out.s, p) != Fp2{1, 0})
        throw invariant_violation("golden roots do not sum to 1");
    if (fp2_mul(out.r, out.s, p) != Fp2{p - 1, 0})
        throw invariant_violation("golden roots do not multiply to -1");
    if (out.r == out.s)
        throw invariant_violation("golden roots coincide");
    return out;
}

namespace detail {

// Shrinks a verified multiple of the order down to the exact order.
template <class PowFn>
uint64_t reduce_order(uint64_t n, const std::vector<std::pair<uint64_t, unsigned>>& factors,
                      PowFn&& is_one_at) {
    if (!is_one_at(n))
        throw std::invalid_argument("element order does not divide the group order");
    for (auto [q, k] : factors) {
        (void)k;
        while (n % q == 0 && is_one_at(n / q)) n /= q;
    }
    return n;
}

inline std::vector<std::pair<uint64_t, unsigned>> merge_factorizations(
    std::vector<std::pair<uint64_t, unsigned>> x,
    const std::vector<std::pair<uint64_t, unsigned>>& y) {
    for (auto [q, k] : y) {
        bool found = false;
        for (auto& [q2, k2] : x) {
            if (q2 == q) {
                k2 += k;
                found = true;
                break;
            }
        }
        if (!found) x.emplace_back(q, k);
    }
    std::sort(x.begin(), x.end());
    return x;
}

}  // namespace detail

inline uint64_t mult_order(uint64_t a, uint64_t p) {
    require_odd_prime(p);
    a %= p;
    if (a == 0) throw std::invalid_argument("0 has no multiplicative order");
    return detail::reduce_order(p - 1, factorize(p - 1),
                                [&](uint64_t e) { return powmod(a, e, p) == 1; });
}

inline uint64_t mult_order(Fp2 x, uint64_t p) {
    require_odd_prime(p);
    if (x == Fp2{0, 0}) throw std::invalid_argument("0 has no multiplicative order");
    // |F_{p^2}^*| = (p - 1)(p + 1); factoring the two halves separately is
    // cheap even when the product would strain trial division.
    uint64_t group = (p - 1) * (p + 1);
    auto factors = detail::merge_factorizations(factorize(p - 1), factorize(p + 1));
    return detail::reduce_order(group, factors,
                                [&](uint64_t e) { return fp2_pow(x, e, p) == Fp2{1, 0}; });
}

// n-th Fibonacci number mod p via the closed form (r^n - s^n) / (r - s).
// In the irreducible case the quotient must fall in the base field.
inline uint64_t binet(uint64_t n, uint64_t p) {
    RootPair roots = golden_roots(p);
    Fp2 num = fp2_sub(fp2_pow(roots.r, n, p), fp2_pow(roots.s, n, p), p);
    Fp2 den = fp2_sub(roots.r, roots.s, p);
    Fp2 q = fp2_mul(num, fp2_inv(den, p), p);
    if (q.b != 0)
        throw invariant_violation("closed-form Fibonacci value left the base field");
    return q.a;
}

}  // namespace pisano
