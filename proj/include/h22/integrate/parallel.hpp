#pragma once

#include <cstddef>
#include <functional>

namespace h22::integrate {

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 = hardware
/// concurrency). Callers write results by index, so output order never depends
/// on scheduling. The first exception thrown by a worker is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace h22::integrate
