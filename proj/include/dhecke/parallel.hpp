#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace dhecke {

/// Thread count from DHECKE_THREADS, defaulting to 1.
inline int default_threads() {
    if (const char* env = std::getenv("DHECKE_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

/// results[k] = fn(k) for k < count, computed on up to `threads` threads.
/// The output order never depends on the schedule.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<R> results(count);
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count < 2) {
        for (std::size_t k = 0; k < count; ++k) results[k] = fn(k);
        return results;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < count; k += workers) results[k] = fn(k);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace dhecke
