#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace treeconn {

// Applies fn to 0..count-1 on up to `workers` threads. Results land in index
// order, so the output is the same at every thread count.
template <typename Fn>
auto parallel_map(int count, int workers, Fn fn) -> std::vector<std::invoke_result_t<Fn, int>> {
  std::vector<std::invoke_result_t<Fn, int>> results(count);
  if (count <= 0) return results;
  workers = std::clamp(workers, 1, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          results[i] = fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& worker : pool) worker.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

}  // namespace treeconn
