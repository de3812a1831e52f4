#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "equilift/common.hpp"

namespace equilift {

/// Execution policy shared by the search-heavy operations. `workers == 1`
/// runs everything inline; higher counts fan independent index ranges out to
/// std::thread. Results are always merged in index order, so the outcome is
/// byte-for-byte independent of the worker count.
struct ExecPolicy {
    int workers = 1;

    static ExecPolicy make(int workers) {
        if (workers < 1) throw input_error("workers must be >= 1");
        return ExecPolicy{workers};
    }
};

/// Applies `body(begin, end)` over [0, n) split into contiguous chunks, one
/// chunk per worker. `body` must only touch state disjoint between chunks.
inline void for_chunks(std::size_t n, const ExecPolicy& pol,
                       const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(pol.workers), n ? n : 1);
    if (w <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(w);
    const std::size_t chunk = (n + w - 1) / w;
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : threads) th.join();
}

/// Maps `fn` over [0, n) and collects the per-index results in index order,
/// regardless of which worker produced them.
template <typename T>
std::vector<T> map_indexed(std::size_t n, const ExecPolicy& pol,
                           const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    for_chunks(n, pol, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
    });
    return out;
}

}  // namespace equilift
