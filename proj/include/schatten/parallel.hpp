#pragma once

#include <thread>
#include <vector>

namespace schatten {

// SCHATTEN_THREADS if set and positive, otherwise hardware concurrency (>= 1).
int default_thread_count();

// requested >= 1 wins; otherwise the default above.
int resolve_thread_count(int requested);

// Runs fn(worker) for worker = 0..workers-1, on separate threads when
// workers > 1. Callers own any result slots; reductions must happen after
// this returns, in worker order, so results do not depend on scheduling.
template <typename Fn>
void run_workers(int workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back([&fn, w] { fn(w); });
  for (auto& t : pool) t.join();
}

}  // namespace schatten
