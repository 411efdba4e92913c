#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace seqcomp::detail {

/// Run fn(i) for i in [0, count). With threads > 1 the indices are striped
/// across workers; callers that care about result order must write into
/// per-index slots and reduce themselves.
inline void for_each_index(std::size_t count, unsigned threads,
                           const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace seqcomp::detail
