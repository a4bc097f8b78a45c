#include "kappa/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kappa {

int worker_count() {
    const char* raw = std::getenv("KAPPA_VERIFY_THREADS");
    if (!raw) return 1;
    char* end = nullptr;
    const long parsed = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || parsed < 1 || parsed > 256) return 1;
    return static_cast<int>(parsed);
}

void for_each_index(long count, const std::function<void(long)>& fn) {
    const int workers = worker_count();
    if (count <= 0) return;
    if (workers == 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    const long chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long begin = static_cast<long>(w) * chunk;
        const long end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                for (long i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace kappa
