#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace affchar {

/// Evaluates f(0), ..., f(n-1) on up to `threads` workers. Results keep their
/// index order; the first exception raised is rethrown.
template <class F>
auto parallel_map(std::size_t n, unsigned threads, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>>
{
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>> slots(n);
    unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) slots[i].emplace(f(i));
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    slots[i].emplace(f(i));
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    next = n;
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

/// Worker count from AFFCHAR_THREADS (default 1).
inline unsigned threads_from_env()
{
    const char* v = std::getenv("AFFCHAR_THREADS");
    if (!v || !*v) return 1;
    try {
        std::size_t pos = 0;
        int t = std::stoi(v, &pos);
        if (pos != std::string(v).size() || t < 1) return 1;
        return static_cast<unsigned>(t);
    } catch (...) {
        return 1;
    }
}

} // namespace affchar
