#pragma once

#include <cstddef>
#include <functional>

namespace sgholder {

// Worker count: SGHOLDER_THREADS if set and positive, else hardware
// concurrency (at least one).
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
// is processed exactly once; results must be written to per-index slots so
// the outcome does not depend on scheduling. The first exception thrown by
// any body is rethrown after all workers have joined.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sgholder
