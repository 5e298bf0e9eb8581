#ifndef SUPPCODE_PARALLEL_HPP
#define SUPPCODE_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace suppcode {

/// Worker count: explicit argument, else SUPPCODE_WORKERS, else hardware.
inline int resolve_workers(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SUPPCODE_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Run fn(i) for i in [0, count) on a small worker pool. Work items must be
/// independent; callers keep results in per-index slots so that merged
/// output stays deterministic regardless of scheduling.
inline void parallel_for_index(long long count, int workers,
                               const std::function<void(long long)>& fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || count <= 1) {
    for (long long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(std::min<long long>(workers, count));
  for (int w = 0; w < spawn; ++w)
    pool.emplace_back([&] {
      while (true) {
        const long long i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace suppcode

#endif
