#pragma once

// Minimal fork-join striping over an index range. Stripes are contiguous,
// their count is fixed up front so callers can keep per-stripe accumulators
// and merge them in stripe order, and the first worker exception is
// rethrown on the calling thread.

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace pisano {

inline unsigned stripe_count(uint64_t n) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (n < hw) hw = static_cast<unsigned>(n);
    return hw == 0 ? 1 : hw;
}

// fn(stripe, lo, hi) over a partition of [0, n) into stripe_count(n) parts.
template <class Fn>
void parallel_stripes(uint64_t n, Fn&& fn) {
    unsigned k = stripe_count(n);
    if (k <= 1) {
        fn(0u, uint64_t{0}, n);
        return;
    }
    std::vector<std::exception_ptr> errors(k);
    std::vector<std::thread> pool;
    pool.reserve(k);
    for (unsigned s = 0; s < k; ++s) {
        uint64_t lo = n * s / k;
        uint64_t hi = n * (s + 1) / k;
        pool.emplace_back([&fn, &errors, s, lo, hi] {
            try {
                fn(s, lo, hi);
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace pisano
