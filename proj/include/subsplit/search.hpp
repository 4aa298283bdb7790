#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace subsplit {

// Default worker count: SUBSPLIT_WORKERS when set, else 1.
int default_workers();

// Runs fn over trial indices 0, 1, ... until one succeeds. Indices are handed
// out in increasing order and every index below the winner is evaluated, so
// the result is the lowest successful index whatever the worker count.
template <class R>
std::optional<std::pair<uint64_t, R>> first_success(uint64_t max_trials, int workers,
                                                    const std::function<std::optional<R>(uint64_t)>& fn)
{
    workers = std::max(1, workers);
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> best{UINT64_MAX};
    std::mutex mu;
    std::optional<std::pair<uint64_t, R>> winner;
    std::exception_ptr failure;

    auto body = [&] {
        for (;;) {
            uint64_t i = next.fetch_add(1);
            if (i >= max_trials || i > best.load())
                return;
            std::optional<R> r;
            try {
                r = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!failure)
                    failure = std::current_exception();
                best.store(0);
                return;
            }
            if (!r)
                continue;
            std::lock_guard<std::mutex> lk(mu);
            if (!winner || i < winner->first) {
                winner.emplace(i, std::move(*r));
                best.store(i);
            }
        }
    };

    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return winner;
}

} // namespace subsplit
