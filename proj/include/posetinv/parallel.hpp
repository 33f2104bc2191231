#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace posetinv {

namespace detail {
inline std::atomic<std::size_t>& thread_override() {
    static std::atomic<std::size_t> value{0};
    return value;
}
}  // namespace detail

// Width: explicit override, else POSETINV_THREADS, else hardware concurrency.
inline std::size_t worker_count() {
    if (auto o = detail::thread_override().load()) return o;
    if (const char* env = std::getenv("POSETINV_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

inline void set_worker_count(std::size_t n) { detail::thread_override().store(n); }

// Runs fn(i) for i in [0, count); results must be written to per-index slots.
// The first exception (by index) is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t width = std::min(worker_count(), count);
    if (width <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = count;
    std::exception_ptr failure;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
    std::vector<T> out(count);
    parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace posetinv
