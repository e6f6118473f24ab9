// Minimal worker pool: results must not depend on scheduling; callers
// collect into pre-sized slots or canonically sorted sets.
#ifndef CRITATLAS_PARALLEL_HPP
#define CRITATLAS_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace critatlas {

inline int worker_count() {
  if (const char* env = std::getenv("CRITATLAS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

inline void parallel_for(size_t count, const std::function<void(size_t)>& body,
                         int threads = worker_count()) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  int spawn = std::min<int>(threads, static_cast<int>(count));
  pool.reserve(spawn);
  for (int t = 0; t < spawn; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
}

}  // namespace critatlas

#endif
