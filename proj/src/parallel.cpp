#include "ptt/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ptt {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PT_TRIMER_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  if (n <= 0) return;
  const int w = std::min(resolve_workers(workers), n);
  if (w <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  pool.reserve(w);
  for (int rank = 0; rank < w; ++rank) {
    pool.emplace_back([&, rank] {
      const int begin = static_cast<int>(static_cast<long long>(n) * rank / w);
      const int end = static_cast<int>(static_cast<long long>(n) * (rank + 1) / w);
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace ptt
