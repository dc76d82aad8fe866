// parallel.hpp — Minimal deterministic-output parallel loop

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace zeno {

// Runs fn(i) for i in [begin, end) on up to `threads` workers. Each call must
// write only to its own slot; the caller combines slots in index order, so the
// result is independent of the scheduling.
inline void parallel_for(std::size_t begin, std::size_t end, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (end <= begin) return;
    const std::size_t count = end - begin;
    if (threads <= 1 || count < 2) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::atomic<std::size_t> cursor{begin};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            try {
                while (true) {
                    const std::size_t i = cursor.fetch_add(1);
                    if (i >= end) break;
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace zeno
