#pragma once

// The length-N cyclic code over F_p cut out by the check polynomial
// x^2 + x - 1, where N is the Fibonacci period mod p. The code has
// dimension 2; its generator matrix is a Fibonacci row and its cyclic
// shift in the irreducible case, and the two rows of root powers in the
// split case. Weight structure, dual distance, and the cyclic identities
// are all verified numerically rather than assumed.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "pisano/arith.hpp"
#include "pisano/fib.hpp"
#include "pisano/field.hpp"
#include "pisano/parallel.hpp"

namespace pisano {

// Full codeword enumeration walks all p^2 scalar pairs; beyond this bound
// on p^2 callers get the closed form instead.
inline constexpr uint64_t enumeration_guard = 10'000'000;

// Bound on N for materializing length-N rows (two rows of 8-byte words).
inline constexpr uint64_t matrix_guard = 4'000'000;

using WeightDistribution = std::map<uint64_t, uint64_t>;

struct GeneratorMatrix {
    uint64_t p = 0;
    uint64_t N = 0;
    FieldCase kind = FieldCase::Split;
    std::array<std::vector<uint64_t>, 2> rows;
};

inline GeneratorMatrix build_generator_matrix(const PisanoProfile& prof) {
    if (prof.N > matrix_guard)
        throw std::invalid_argument(
            "code length too large to materialize; use closed_form_weights");
    const uint64_t p = prof.p;
    const uint64_t N = prof.N;
    GeneratorMatrix g;
    g.p = p;
    g.N = N;
    g.kind = prof.kind;
    g.rows[0].resize(N);
    g.rows[1].resize(N);
    if (prof.kind == FieldCase::Split) {
        RootPair roots = golden_roots(p);
        uint64_t rp = 1, sp = 1;
        for (uint64_t i = 0; i < N; ++i) {
            rp = mulmod(rp, roots.r.a, p);
            sp = mulmod(sp, roots.s.a, p);
            g.rows[0][i] = rp;
            g.rows[1][i] = sp;
        }
        if (g.rows[0][N - 1] != 1 || g.rows[1][N - 1] != 1)
            throw invariant_violation("root powers fail to close at the period");
        uint64_t minor = submod(mulmod(g.rows[0][0], g.rows[1][1], p),
                                mulmod(g.rows[0][1], g.rows[1][0], p), p);
        if (minor == 0)
            throw invariant_violation("split generator rows are dependent");
    } else {
        g.rows[0][0] = 0;
        g.rows[0][1] = 1 % p;
        for (uint64_t i = 2; i < N; ++i)
            g.rows[0][i] = addmod(g.rows[0][i - 1], g.rows[0][i - 2], p);
        if (addmod(g.rows[0][N - 1], g.rows[0][N - 2], p) != 0 || g.rows[0][N - 1] != 1)
            throw invariant_violation("Fibonacci row fails to wrap to (0, 1)");
        for (uint64_t i = 0; i < N; ++i)
            g.rows[1][i] = g.rows[0][(i + N - 1) % N];
        uint64_t minor = submod(mulmod(g.rows[0][1], g.rows[1][2], p),
                                mulmod(g.rows[0][2], g.rows[1][1], p), p);
        if (minor != 1)
            throw invariant_violation("leading Fibonacci minor is not 1");
    }
    return g;
}

inline std::vector<uint64_t> codeword(const GeneratorMatrix& g, uint64_t l1, uint64_t l2) {
    l1 %= g.p;
    l2 %= g.p;
    std::vector<uint64_t> out(g.N);
    for (uint64_t i = 0; i < g.N; ++i)
        out[i] = addmod(mulmod(l1, g.rows[0][i], g.p), mulmod(l2, g.rows[1][i], g.p), g.p);
    return out;
}

inline std::vector<uint64_t> cyclic_right_shift(const std::vector<uint64_t>& v) {
    if (v.empty()) return v;
    std::vector<uint64_t> out(v.size());
    out[0] = v.back();
    std::copy(v.begin(), v.end() - 1, out.begin() + 1);
    return out;
}

// Exact weight census over all p^2 codewords. For each scalar pair the
// zero coordinates are counted through a per-column ratio table, so the
// census costs O(p^2 + pN) yet inspects every codeword.
inline WeightDistribution enumerate_weights(const GeneratorMatrix& g) {
    const uint64_t p = g.p;
    const uint64_t N = g.N;
    if (p * p > enumeration_guard)
        throw std::invalid_argument(
            "codeword space too large to enumerate; use closed_form_weights");
    // Coordinate i of l1 row0 + l2 row1 vanishes iff l2 = l1 * ratio_i
    // (when row1[i] != 0), or iff l1 row0[i] = 0 (when row1[i] == 0).
    std::vector<uint64_t> ratio;
    ratio.reserve(N);
    uint64_t row1_zeros = 0;
    for (uint64_t i = 0; i < N; ++i) {
        uint64_t a = g.rows[0][i], b = g.rows[1][i];
        if (b == 0) {
            if (a == 0) throw invariant_violation("generator matrix has a zero column");
            ++row1_zeros;
        } else {
            ratio.push_back(mulmod(submod(0, a, p), inv_mod(b, p), p));
        }
    }
    std::vector<WeightDistribution> partial(stripe_count(p));
    parallel_stripes(p, [&](unsigned s, uint64_t lo, uint64_t hi) {
        std::vector<uint32_t> zero_count(p);
        WeightDistribution& hist = partial[s];
        for (uint64_t l1 = lo; l1 < hi; ++l1) {
            std::fill(zero_count.begin(), zero_count.end(), 0);
            for (uint64_t q : ratio) ++zero_count[mulmod(l1, q, p)];
            uint64_t fixed = l1 == 0 ? row1_zeros : 0;
            for (uint64_t l2 = 0; l2 < p; ++l2)
                ++hist[N - fixed - zero_count[l2]];
        }
    });
    WeightDistribution hist;
    for (const auto& part : partial)
        for (auto [w, c] : part) hist[w] += c;
    return hist;
}

// Weight distribution from the rank decomposition alone: nonzero words
// have weight N - K with multiplicity (p - 1) e and weight N with
// multiplicity (p - 1)(p + 1 - e). The code is one-weight exactly when
// e = p + 1. Both power moments are re-checked before returning.
inline WeightDistribution closed_form_weights(const PisanoProfile& prof) {
    const uint64_t p = prof.p;
    if (prof.e > p + 1)
        throw invariant_violation("rank of apparition exceeds p + 1");
    uint64_t f1 = (p - 1) * prof.e;
    uint64_t f2 = (p - 1) * (p + 1 - prof.e);
    WeightDistribution dist;
    dist[0] = 1;
    dist[prof.N - prof.K] = f1;
    if (f2 != 0) dist[prof.N] = f2;
    using wide = unsigned __int128;
    wide total = wide{1} + f1 + f2;
    if (total != wide{p} * p)
        throw invariant_violation("weight multiplicities do not sum to p^2");
    wide weight_sum = wide{prof.N - prof.K} * f1 + wide{prof.N} * f2;
    if (weight_sum != wide{prof.N} * (p - 1) * p)
        throw invariant_violation("first power moment of the weight distribution failed");
    return dist;
}

inline bool is_one_weight(const WeightDistribution& dist) {
    uint64_t nonzero = 0;
    for (auto [w, c] : dist)
        if (w != 0 && c != 0) ++nonzero;
    return nonzero == 1;
}

// Distance of the dual code: always 2 or 3 here. It is 2 exactly when two
// generator columns are proportional, i.e. when two of the projective
// points (row0[i] : row1[i]) coincide.
inline uint64_t dual_distance(const GeneratorMatrix& g) {
    std::vector<uint64_t> keys(g.N);
    for (uint64_t i = 0; i < g.N; ++i) {
        uint64_t a = g.rows[0][i], b = g.rows[1][i];
        if (a == 0 && b == 0) throw invariant_violation("generator matrix has a zero column");
        keys[i] = b == 0 ? g.p : mulmod(a, inv_mod(b, g.p), g.p);
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end() ? 3 : 2;
}

// The code is MDS (as a [N, 2, N - 1] code) exactly when the dual reaches
// distance 3, which happens exactly when K = 1. Disagreement between the
// two criteria is a falsified theorem, not a caller error.
inline bool is_mds(const PisanoProfile& prof, const GeneratorMatrix& g) {
    bool by_dual = dual_distance(g) == 3;
    bool by_order = prof.K == 1;
    if (by_dual != by_order)
        throw invariant_violation("dual distance 3 and K = 1 disagree for p = " +
                                  std::to_string(prof.p));
    return by_dual;
}

struct CyclicCheck {
    bool division_exact = false;  // x^N - 1 == g(x)(x^2 + x - 1) with zero remainder
    bool shift_closure = false;   // right shifts of sampled codewords stay in the code
    bool annihilator = false;     // x^2 + x - 1 annihilates sampled codewords mod x^N - 1
    uint64_t samples = 0;

    friend bool operator==(const CyclicCheck&, const CyclicCheck&) = default;
};

// Solves for the scalar pair on the two leading columns, then checks the
// whole word against it.
inline bool in_row_space(const GeneratorMatrix& g, const std::vector<uint64_t>& w) {
    const uint64_t p = g.p;
    if (w.size() != g.N) return false;
    uint64_t a = g.rows[0][0], b = g.rows[0][1];
    uint64_t c = g.rows[1][0], d = g.rows[1][1];
    uint64_t det = submod(mulmod(a, d, p), mulmod(b, c, p), p);
    if (det == 0) throw invariant_violation("leading generator columns are dependent");
    uint64_t dinv = inv_mod(det, p);
    uint64_t l1 = mulmod(dinv, submod(mulmod(w[0], d, p), mulmod(w[1], c, p), p), p);
    uint64_t l2 = mulmod(dinv, submod(mulmod(a, w[1], p), mulmod(b, w[0], p), p), p);
    for (uint64_t i = 0; i < g.N; ++i)
        if (addmod(mulmod(l1, g.rows[0][i], p), mulmod(l2, g.rows[1][i], p), p) != w[i])
            return false;
    return true;
}

// Certifies the cyclic structure three ways: the check polynomial divides
// x^N - 1 exactly (verified by re-multiplying the quotient), sampled
// codewords shift back into the row space, and the check polynomial
// annihilates them cyclically. Any failure throws.
inline CyclicCheck verify_cyclic(const GeneratorMatrix& g, uint64_t samples = 100) {
    const uint64_t p = g.p;
    const uint64_t N = g.N;
    CyclicCheck out;
    out.samples = samples;

    std::vector<uint64_t> rem(N + 1, 0);
    rem[N] = 1;
    rem[0] = p - 1;
    std::vector<uint64_t> quot(N - 1, 0);
    for (uint64_t d = N; d >= 2; --d) {
        uint64_t c = rem[d];
        quot[d - 2] = c;
        rem[d] = 0;
        rem[d - 1] = submod(rem[d - 1], c, p);
        rem[d - 2] = addmod(rem[d - 2], c, p);
    }
    bool exact = rem[0] == 0 && rem[1] == 0;
    for (uint64_t k = 0; k <= N && exact; ++k) {
        uint64_t conv = 0;
        if (k >= 2) conv = addmod(conv, quot[k - 2], p);
        if (k >= 1 && k - 1 < quot.size()) conv = addmod(conv, quot[k - 1], p);
        if (k < quot.size()) conv = submod(conv, quot[k], p);
        uint64_t expect = k == N ? 1 % p : (k == 0 ? p - 1 : 0);
        if (conv != expect) exact = false;
    }
    out.division_exact = exact;
    if (!out.division_exact)
        throw invariant_violation("x^2 + x - 1 does not divide x^N - 1 exactly");

    std::mt19937_64 rng(p);
    bool shifts_ok = true, annihilated = true;
    for (uint64_t t = 0; t < samples && shifts_ok && annihilated; ++t) {
        uint64_t l1 = t == 0 ? 0 : rng() % p;
        uint64_t l2 = t == 0 ? 0 : rng() % p;
        std::vector<uint64_t> c = codeword(g, l1, l2);
        if (!in_row_space(g, cyclic_right_shift(c))) shifts_ok = false;
        for (uint64_t k = 0; k < N && annihilated; ++k) {
            uint64_t acc = submod(addmod(c[(k + N - 1) % N], c[(k + N - 2) % N], p), c[k], p);
            if (acc != 0) annihilated = false;
        }
    }
    out.shift_closure = shifts_ok;
    out.annihilator = annihilated;
    if (!out.shift_closure)
        throw invariant_violation("cyclic shift left the code");
    if (!out.annihilator)
        throw invariant_violation("check polynomial failed to annihilate a codeword");
    return out;
}

struct CodeAnalysis {
    PisanoProfile profile;
    WeightDistribution closed_form;
    bool one_weight = false;
    std::optional<WeightDistribution> enumerated;
    std::optional<uint64_t> dual_dist;
    std::optional<bool> mds;
    std::optional<CyclicCheck> cyclic;

    friend bool operator==(const CodeAnalysis&, const CodeAnalysis&) = default;
};

// Everything the library can certify about the code mod p. The census,
// dual distance, and cyclic checks run whenever the length and p^2 bounds
// allow; the closed form and the census must then agree exactly.
inline CodeAnalysis analyze_code(const PisanoProfile& prof) {
    CodeAnalysis out;
    out.profile = prof;
    out.closed_form = closed_form_weights(prof);
    out.one_weight = is_one_weight(out.closed_form);
    if (prof.N <= matrix_guard) {
        GeneratorMatrix g = build_generator_matrix(prof);
        out.dual_dist = dual_distance(g);
        out.mds = is_mds(prof, g);
        out.cyclic = verify_cyclic(g);
        if (prof.p * prof.p <= enumeration_guard) {
            out.enumerated = enumerate_weights(g);
            if (*out.enumerated != out.closed_form)
                throw invariant_violation("closed-form weights disagree with enumeration");
        }
    }
    return out;
}

inline CodeAnalysis analyze_code(uint64_t p) { return analyze_code(pisano_profile(p)); }

}  // namespace pisano
