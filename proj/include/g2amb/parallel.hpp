#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace g2a {

// Thread budget for the component kernels. threads == 1 runs the serial reference loops.
struct Exec {
  int threads = 1;
  static Exec serial() { return {1}; }
  static Exec with_threads(int n) { return {n < 1 ? 1 : n}; }
  // G2AMB_THREADS from the environment; 1 when unset or invalid.
  static Exec from_env();
  bool parallel() const { return threads > 1; }
};

// Calls f(i) for i in [0, n); exceptions thrown by f are rethrown on the calling thread.
template <class F>
void for_each_index(std::size_t n, Exec exec, F&& f) {
  if (!exec.parallel()) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(exec.threads)
  for (long i = 0; i < count; ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace g2a
