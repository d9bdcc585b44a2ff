#pragma once

#include <cstddef>
#include <functional>

namespace redei {

/// Worker threads for sweeps: REDEI_THREADS if set to a positive integer,
/// otherwise the hardware concurrency.
unsigned worker_count();

/// Runs body(i) for every i in [0, n) on up to worker_count() threads. Calls
/// made from inside a worker run inline. The first exception thrown by any
/// body is rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace redei
