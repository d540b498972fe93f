#pragma once

#include <cstddef>
#include <functional>

namespace betatrace {

// Runs body(i) for i in [0, count) across a small thread pool. Each index must
// be independent; results should be written to preallocated slots so output
// order never depends on scheduling. The first exception thrown by any worker
// is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned max_workers = 0);

}  // namespace betatrace
