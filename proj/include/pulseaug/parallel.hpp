#pragma once

#include <cstddef>
#include <functional>

namespace pulseaug {

/// Runs fn(0) .. fn(n-1) across up to `jobs` worker threads. Work items
/// must be independent; the first exception thrown by any item is
/// rethrown on the calling thread after all workers finish.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace pulseaug
