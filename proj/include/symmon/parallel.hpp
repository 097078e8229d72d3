#pragma once

#include <cstddef>
#include <functional>

namespace symmon {

// Runs fn(0..n-1) on up to `jobs` worker threads. Results must be written to
// preallocated, index-addressed slots so the outcome is independent of
// scheduling. Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

} // namespace symmon
