#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cutjoin {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, count); fn returns a failure message or nullopt.
// Failures come back ordered by index, so output never depends on the
// worker count.
template <typename Fn>
std::vector<std::string> parallel_collect_failures(std::size_t count, int threads, Fn&& fn) {
    const int nthreads = std::min<std::size_t>(resolve_threads(threads), count ? count : 1);
    std::vector<std::optional<std::string>> slots(count);
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = fn(i);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            workers.emplace_back([&, t] {
                for (std::size_t i = t; i < count; i += nthreads) slots[i] = fn(i);
            });
        }
        for (auto& w : workers) w.join();
    }
    std::vector<std::string> failures;
    for (auto& s : slots)
        if (s) failures.push_back(std::move(*s));
    return failures;
}

}  // namespace cutjoin
