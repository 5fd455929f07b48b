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

namespace weissler {

// Worker count for parameter sweeps.  WEISSLER_LAB_THREADS caps it; 0 means
// run serially.  Unset: hardware concurrency.
inline unsigned sweep_threads() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("WEISSLER_LAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v <= 0) return 1;
            return static_cast<unsigned>(std::min<long>(v, hw));
        } catch (...) {
        }
    }
    return hw;
}

// Calls fn(i) for i in [0, count).  fn must only touch its own output slot.
// The first exception thrown by any call is rethrown here.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(sweep_threads(), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace weissler
