#ifndef IPD_PARALLEL_HPP
#define IPD_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ipd {

/// Default worker count: the hardware's available parallelism, at least 1.
inline int default_workers() {
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/**
 * Splits [0, total) into `workers` contiguous rank ranges and runs
 * fn(first, last, worker) on each. Ranges depend only on (total, workers),
 * so callers that merge per-worker results by worker index are deterministic.
 * The first exception thrown by any worker is rethrown.
 */
template <typename Fn>
void parallel_ranges(std::uint64_t total, int workers, Fn &&fn) {
  workers = std::max(1, workers);
  if (workers == 1 || total < static_cast<std::uint64_t>(workers)) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::uint64_t k = 0; k < w; ++k) {
    const std::uint64_t first = total * k / w;
    const std::uint64_t last = total * (k + 1) / w;
    pool.emplace_back([&, first, last, k] {
      try {
        fn(first, last, static_cast<int>(k));
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    });
  }
  for (auto &t : pool)
    t.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace ipd

#endif
