#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace splitkit {

// Runs fn(0..n-1) across up to `jobs` workers; results land at their task
// index, so the merge is deterministic regardless of scheduling.
template <class T>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    if (n == 0) return out;
    if (jobs == 0) jobs = 1;
    jobs = std::min<std::size_t>(jobs, n);
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) err = std::current_exception();
                    return;
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(err);
    return out;
}

inline unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

}  // namespace splitkit
