#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

#include "grayfilt/core.hpp"

namespace grayfilt {

namespace {
std::atomic<unsigned> g_threads{1};
}  // namespace

void set_thread_count(unsigned n) {
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  g_threads.store(n, std::memory_order_relaxed);
}

unsigned thread_count() { return g_threads.load(std::memory_order_relaxed); }

namespace detail {

void for_rows(int rows, const std::function<void(int, int)>& fn) {
  const int workers = std::min<int>(static_cast<int>(thread_count()), rows);
  if (workers <= 1) {
    fn(0, rows);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  const int base = rows / workers;
  const int extra = rows % workers;
  int begin = 0;
  int first_end = 0;
  for (int w = 0; w < workers; ++w) {
    const int end = begin + base + (w < extra ? 1 : 0);
    if (w == 0) {
      first_end = end;
    } else {
      pool.emplace_back([&fn, &errors, w, begin, end] {
        try {
          fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    begin = end;
  }
  try {
    fn(0, first_end);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  pool.clear();  // join
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail
}  // namespace grayfilt
