#pragma once

#include <functional>

namespace kappa {

/// Number of worker threads the harness may use: the value of the
/// KAPPA_VERIFY_THREADS environment variable, or 1 when unset or invalid.
int worker_count();

/// Runs fn(i) for every i in [0, count), split across worker_count()
/// threads in contiguous chunks. Callers write results into preallocated
/// per-index slots and reduce sequentially afterwards, so a parallel run
/// produces byte-identical reports to a serial one. The first exception
/// thrown by any worker is rethrown on the calling thread.
void for_each_index(long count, const std::function<void(long)>& fn);

}  // namespace kappa
