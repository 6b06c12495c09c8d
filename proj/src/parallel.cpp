#include "parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace arcspan {

namespace {
std::atomic<int> g_jobs{0};
}

void set_parallelism(int k) { g_jobs.store(k < 0 ? 0 : k); }

int parallelism() {
  int k = g_jobs.load();
  if (k > 0) return k;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

void parallel_for(int m, const std::function<void(int)>& body) {
  int workers = std::min(parallelism(), m);
  if (workers <= 1 || m < 4) {
    for (int i = 0; i < m; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mu;
  auto run = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= m || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace arcspan
