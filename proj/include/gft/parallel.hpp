#pragma once

#include <cstddef>
#include <functional>

namespace gft {

/// Worker count: GFT_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs task(0..n_tasks-1) across worker_count() threads. Tasks must write
/// to disjoint outputs; the first exception thrown by a task is rethrown.
void parallel_for(std::size_t n_tasks, const std::function<void(std::size_t)>& task);

}  // namespace gft
