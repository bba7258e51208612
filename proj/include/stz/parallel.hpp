#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace stz {

// Worker count for batch producers: SCHUR_TOEPLITZ_THREADS caps the pool,
// defaulting to the hardware concurrency.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("SCHUR_TOEPLITZ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1) hw = std::min<unsigned>(hw, unsigned(v));
    }
    return hw;
}

// Runs f(i) for i in [0, count). Each index is computed independently with a
// fixed internal reduction order, so the results match a sequential run.
template <class F>
void parallel_for(long long count, F&& f) {
    unsigned workers = worker_count();
    if (workers <= 1 || count < 2) {
        for (long long i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<long long> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<unsigned>(workers, unsigned(count)); ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace stz
