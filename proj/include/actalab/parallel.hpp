#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace actalab {

  // Applies fn to 0..n-1 on up to `threads` workers and returns the results
  // in index order. The first exception thrown by fn is rethrown.
  template <typename F>
  auto parallel_map(std::size_t n, std::size_t threads, F&& fn)
      -> std::vector<std::invoke_result_t<F&, std::size_t>> {
    using R = std::invoke_result_t<F&, std::size_t>;
    std::vector<std::optional<R>> slots(n);
    threads = std::max<std::size_t>(1, std::min(threads, n));
    if (threads == 1) {
      for (std::size_t i = 0; i < n; ++i) {
        slots[i].emplace(fn(i));
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::mutex               error_mutex;
      auto                     work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            slots[i].emplace(fn(i));
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) {
              error = std::current_exception();
            }
            next = n;
          }
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(work);
      }
      for (auto& th : pool) {
        th.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) {
      out.push_back(std::move(*s));
    }
    return out;
  }

}  // namespace actalab
