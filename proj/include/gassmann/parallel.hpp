#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gassmann {

/// Runs body(i) for i in [0, n) on `width` threads, handing out indices in
/// order. The first exception thrown by any call is rethrown after all
/// threads have joined; remaining indices are skipped once one is caught.
template <class Body>
void parallel_for(std::size_t n, unsigned width, Body&& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; !failed.load() && (i = next.fetch_add(1)) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gassmann
