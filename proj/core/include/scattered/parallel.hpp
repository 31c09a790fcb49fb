#ifndef SCATTERED_PARALLEL_HPP
#define SCATTERED_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace scattered {

/// Worker count to use when the caller passes 0.
inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, n) into `workers` contiguous chunks and calls fn(chunk, begin, end)
/// for each, on its own thread. The first exception thrown by any chunk is rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t n, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));
  if (workers <= 1) {
    fn(0u, std::uint64_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = n * w / workers;
    const std::uint64_t end = n * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace scattered

#endif  // SCATTERED_PARALLEL_HPP
