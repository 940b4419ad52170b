#include "affgr/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace affgr {

unsigned worker_count() {
  const char* env = std::getenv("AFFGR_THREADS");
  if (!env) return 1;
  try {
    const long v = std::stol(env);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  return 1;
}

void parallel_for(std::size_t count, const std::function<void(unsigned, std::size_t)>& body, unsigned workers) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto run = [&](unsigned worker) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(worker, i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = count;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace affgr
