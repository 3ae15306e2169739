#ifndef CONEDIRAC_PARALLEL_HPP
#define CONEDIRAC_PARALLEL_HPP

// Grid-level parallel map over independent tasks.  Work items are indexed,
// results are stored by index, so the output ordering is independent of the
// thread count.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace conedirac::par {

// CONE_DIRAC_THREADS overrides the hardware default.
inline int default_threads() {
  if (const char* env = std::getenv("CONE_DIRAC_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

inline void parallel_for(int n, int threads,
                         const std::function<void(int)>& fn) {
  if (n <= 0) return;
  threads = std::min(std::max(threads, 1), n);
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace conedirac::par

#endif
