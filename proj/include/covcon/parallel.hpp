#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace covcon {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return std::max(1, static_cast<int>(std::min(hw, 16u)));
}

/// Runs body(begin, end) over contiguous chunks of [0, n) on `threads`
/// threads. Chunk boundaries depend only on n and threads, so any
/// deterministic per-index output is schedule-independent.
template <class Body>
void parallel_chunks(int n, int threads, Body&& body) {
  threads = std::min(resolve_threads(threads), std::max(n, 1));
  if (threads <= 1 || n <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace covcon
