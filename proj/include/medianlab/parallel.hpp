#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace medianlab {

// Runs f(lo, hi, worker_index) on contiguous chunks of [0, n).
// workers == 1 executes inline. Callers must reduce per-worker results in
// worker-index order so output does not depend on the split.
template <class F>
void parallel_chunks(std::size_t n, unsigned workers, F&& f) {
  if (n == 0) return;
  if (workers <= 1) {
    f(std::size_t{0}, n, 0u);
    return;
  }
  unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::size_t chunk = (n + used - 1) / used;
  std::vector<std::thread> threads;
  threads.reserve(used);
  for (unsigned w = 0; w < used; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&f, lo, hi, w] { f(lo, hi, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace medianlab
