#pragma once

// Classification tests for the irreducible-case codes: a dimension-2
// irreducible cyclic code that is two-weight yet neither semiprimitive nor
// a subfield code falls outside the classical classification. The known
// finite exception list contains no dimension-2 code, so that exclusion
// holds wholesale here.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pisano/arith.hpp"
#include "pisano/fib.hpp"
#include "pisano/field.hpp"

namespace pisano {

struct CounterexampleVerdict {
    uint64_t p = 0;
    uint64_t N = 0;
    uint64_t u = 0;
    bool semiprimitive = false;
    bool subfield = false;
    bool exceptional_excluded = false;
    bool n_equals_2p_plus_2 = false;
    bool is_counterexample = false;

    friend bool operator==(const CounterexampleVerdict&, const CounterexampleVerdict&) = default;
};

// u from p^2 - 1 = N u; the length always divides the ambient group order.
inline uint64_t compute_u(uint64_t p, uint64_t N) {
    require_modulus(p);
    if (!is_prime(p)) throw std::invalid_argument("u is defined for prime p");
    uint64_t group = (p - 1) * (p + 1);
    if (N == 0 || group % N != 0)
        throw invariant_violation("code length does not divide p^2 - 1");
    return group / N;
}

// True when -1 is a power of p mod u. The powers of p form a cyclic
// group, so this happens exactly when the order of p is even and the
// half-order power lands on -1. A trivial modulus u = 1 is counted as
// failing the test; u = 2 passes through p^0 = 1 = -1 (mod 2).
inline bool is_semiprimitive(uint64_t p, uint64_t u) {
    if (u == 0) throw std::invalid_argument("u must be positive");
    if (u == 1) return false;
    if (u == 2) return true;
    uint64_t r = p % u;
    if (std::gcd(r, u) != 1) return false;  // no power of p is a unit target
    uint64_t phi = euler_phi(u);
    uint64_t ord = detail::reduce_order(phi, factorize(phi),
                                        [&](uint64_t e) { return powmod(r, e, u) == 1; });
    return ord % 2 == 0 && powmod(r, ord / 2, u) == u - 1;
}

// The only proper subfield of F_{p^2} is F_p, so a subfield code needs
// length exactly p - 1.
inline bool is_subfield_code(uint64_t p, uint64_t N) {
    if (field_case(p) != FieldCase::Irreducible)
        throw std::invalid_argument("subfield test applies to the irreducible case only");
    return N == p - 1;
}

inline CounterexampleVerdict counterexample_verdict(const PisanoProfile& prof) {
    if (prof.kind != FieldCase::Irreducible)
        throw std::invalid_argument(
            "counterexample analysis applies to the irreducible case only");
    CounterexampleVerdict v;
    v.p = prof.p;
    v.N = prof.N;
    v.u = compute_u(prof.p, prof.N);
    v.semiprimitive = is_semiprimitive(prof.p, v.u);
    v.subfield = is_subfield_code(prof.p, prof.N);
    v.exceptional_excluded = true;  // every listed exception has dimension > 2
    v.n_equals_2p_plus_2 = prof.N == 2 * (prof.p + 1);
    v.is_counterexample = !v.semiprimitive && !v.subfield && v.exceptional_excluded;
    if (v.n_equals_2p_plus_2) {
        // With N = 2(p+1): u = (p-1)/2 and p = 2u + 1 = 1 (mod u) when u > 1.
        if (v.u != (prof.p - 1) / 2)
            throw invariant_violation("u is not (p - 1) / 2 despite N = 2(p + 1)");
        if (v.u > 1 && prof.p % v.u != 1)
            throw invariant_violation("p is not 1 mod u despite N = 2(p + 1)");
    }
    return v;
}

inline CounterexampleVerdict counterexample_verdict(uint64_t p) {
    return counterexample_verdict(pisano_profile(p));
}

}  // namespace pisano
