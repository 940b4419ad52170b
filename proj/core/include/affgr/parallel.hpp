#pragma once

#include <cstddef>
#include <functional>

namespace affgr {

// AFFGR_THREADS, else 1.
unsigned worker_count();

// Calls body(worker, index) for index in [0, count). Indices are handed out
// dynamically; worker identifies the calling thread in [0, workers).
void parallel_for(std::size_t count, const std::function<void(unsigned, std::size_t)>& body,
                  unsigned workers = worker_count());

}  // namespace affgr
