#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace coverq {

/// out[k] = fn(k) for k < count on up to `workers` threads. Results land in
/// index order whatever the scheduling, so output stays deterministic. The
/// first exception thrown by fn is rethrown after all workers stop.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, std::size_t workers, Fn fn) {
  std::vector<T> out(count);
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    for (std::size_t k; !failed && (k = next.fetch_add(1)) < count;) {
      try {
        out[k] = fn(k);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace coverq
