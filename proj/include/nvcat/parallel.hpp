#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <algorithm>
#include <string>
#include <thread>
#include <vector>

namespace nvcat {

/// Worker cap: NVCAT_THREADS if set to a positive integer, else the hardware concurrency.
inline std::size_t thread_cap() {
    if (const char* env = std::getenv("NVCAT_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Evaluates f(0..n-1) on up to thread_cap() workers. Results keep index order;
/// if any call throws, the exception of the lowest failing index is rethrown.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{0}))> {
    using R = decltype(f(std::size_t{0}));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace nvcat
